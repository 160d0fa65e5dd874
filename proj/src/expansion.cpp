#include "asmkit/expansion.hpp"

#include <algorithm>

#include "asmkit/errors.hpp"

namespace asmkit {

std::vector<int> natural_order(int k) {
  std::vector<int> o(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) o[static_cast<std::size_t>(i)] = i;
  return o;
}

// ---------------------------------------------------------------------------
// Admissible decomposition

namespace {

bool factors_admissible(const RationalFunction& f) {
  for (const auto& fac : f.factors())
    if (sgn(fac.poly.constant_term()) == 0) return false;
  return true;
}

}  // namespace

AdmissibleDecomposition admissible_decompose(const RationalFunction& f0) {
  RationalFunction f = f0;
  if (!factors_admissible(f)) f = f.gcd_reduce();
  if (!factors_admissible(f)) throw AdmissibilityError("denominator factor with zero constant term");
  AdmissibleDecomposition d;
  Monomial lo = f.num().min_exponents();
  for (int v = 0; v < kMaxVars; ++v) d.gamma.e[v] = std::max(0, -lo.e[v]);
  d.P = f.num().shift(d.gamma);
  d.Q = LaurentPolynomial(1L);
  for (const auto& fac : f.factors()) d.Q *= fac.poly.pow(fac.exp);
  return d;
}

bool is_admissible(const RationalFunction& f) {
  try {
    admissible_decompose(f);
    return true;
  } catch (const AdmissibilityError&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Truncated series

TruncatedSeries::TruncatedSeries(const Monomial& caps) : caps_(caps) {
  std::size_t s = 1;
  stride_.resize(kMaxVars);
  for (int v = 0; v < kMaxVars; ++v) {
    if (caps_.e[v] < 0) throw std::invalid_argument("negative truncation cap");
    stride_[v] = s;
    s *= static_cast<std::size_t>(caps_.e[v] + 1);
  }
  c_.assign(s, Rational(0));
}

std::size_t TruncatedSeries::index(const Monomial& m) const {
  std::size_t i = 0;
  for (int v = 0; v < kMaxVars; ++v) i += static_cast<std::size_t>(m.e[v]) * stride_[v];
  return i;
}

Monomial TruncatedSeries::unindex(std::size_t i) const {
  Monomial m;
  for (int v = 0; v < kMaxVars; ++v) {
    std::size_t r = static_cast<std::size_t>(caps_.e[v] + 1);
    m.e[v] = static_cast<int32_t>(i % r);
    i /= r;
  }
  return m;
}

bool TruncatedSeries::inside(const Monomial& m) const {
  for (int v = 0; v < kMaxVars; ++v)
    if (m.e[v] < 0 || m.e[v] > caps_.e[v]) return false;
  return true;
}

TruncatedSeries TruncatedSeries::from_polynomial(const LaurentPolynomial& p, const Monomial& caps) {
  TruncatedSeries s(caps);
  for (const auto& [m, c] : p.terms()) {
    for (int v = 0; v < kMaxVars; ++v)
      if (m.e[v] < 0) throw std::invalid_argument("truncated series of a negative power");
    if (s.inside(m)) s.c_[s.index(m)] += c;
  }
  return s;
}

Rational TruncatedSeries::coefficient(const Monomial& m) const {
  if (!inside(m)) return 0;
  return c_[index(m)];
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r(caps_);
  std::vector<std::pair<Monomial, const Rational*>> nz;
  for (std::size_t j = 0; j < o.c_.size(); ++j)
    if (sgn(o.c_[j]) != 0) nz.emplace_back(o.unindex(j), &o.c_[j]);
  Rational t;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Monomial a = unindex(i);
    for (const auto& [b, cb] : nz) {
      Monomial s = a * b;
      if (!r.inside(s)) continue;
      mpq_mul(t.get_mpq_t(), c_[i].get_mpq_t(), cb->get_mpq_t());
      r.c_[r.index(s)] += t;
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Rational& c0 = c_[0];
  if (sgn(c0) == 0) throw AdmissibilityError("series inverse of a series without constant term");
  Rational inv0 = 1 / c0;
  std::vector<std::pair<Monomial, const Rational*>> nz;
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (sgn(c_[j]) != 0) nz.emplace_back(unindex(j), &c_[j]);
  TruncatedSeries r(caps_);
  r.c_[0] = inv0;
  Rational acc, t;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    Monomial m = unindex(i);
    acc = 0;
    for (const auto& [b, cb] : nz) {
      Monomial d = m / b;
      bool ok = true;
      for (int v = 0; v < kMaxVars && ok; ++v) ok = d.e[v] >= 0;
      if (!ok) continue;
      mpq_mul(t.get_mpq_t(), cb->get_mpq_t(), r.c_[index(d)].get_mpq_t());
      acc += t;
    }
    r.c_[i] = -acc * inv0;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Constant terms

namespace {

void require_vars_in(const RationalFunction& f, const std::vector<int>& order) {
  for (int v = 0; v < kMaxVars; ++v)
    if (f.uses_var(v) && std::find(order.begin(), order.end(), v) == order.end())
      throw UsageError("function uses " + var_name(v) + ", which is not in the variable order");
}

}  // namespace

Rational ct_fast(const RationalFunction& f, const std::vector<int>& order) {
  require_vars_in(f, order);
  AdmissibleDecomposition d = admissible_decompose(f);
  if (d.P.is_zero()) return 0;
  Monomial pmin = d.P.min_exponents();
  Monomial caps;
  for (int v = 0; v < kMaxVars; ++v) {
    caps.e[v] = d.gamma.e[v] - pmin.e[v];
    if (caps.e[v] < 0) return 0;
  }
  // Expand Q factor by factor inside the box, then invert once.
  RationalFunction rf = f;
  if (!factors_admissible(rf)) rf = rf.gcd_reduce();
  TruncatedSeries q = TruncatedSeries::from_polynomial(LaurentPolynomial(1L), caps);
  for (const auto& fac : rf.factors()) {
    TruncatedSeries s = TruncatedSeries::from_polynomial(fac.poly, caps);
    for (int i = 0; i < fac.exp; ++i) q = q * s;
  }
  TruncatedSeries inv = q.inverse();
  Rational total = 0;
  for (const auto& [m, c] : d.P.terms()) total += c * inv.coefficient(d.gamma / m);
  return total;
}

RationalFunction coefficient_univariate(const RationalFunction& f, int var, int c) {
  if (f.is_zero()) return f;
  std::vector<RationalFunction::Factor> outside, inside;
  for (const auto& fac : f.factors()) (fac.poly.uses_var(var) ? inside : outside).push_back(fac);
  const LaurentPolynomial& N = f.num();
  int J0 = N.min_degree(var);
  int T = c - J0;
  if (T < 0) return RationalFunction();
  if (inside.empty()) return RationalFunction::from_parts(N.coefficient(var, c), outside);

  LaurentPolynomial D(1L), d0(1L);
  std::vector<RationalFunction::Factor> d0fac;
  for (const auto& fac : inside) {
    D *= fac.poly.pow(fac.exp);
    LaurentPolynomial at0 = fac.poly.evaluate_var(var, 0);
    d0 *= at0.pow(fac.exp);
    d0fac.push_back({at0, fac.exp * (T + 1)});
  }
  std::vector<LaurentPolynomial> dj = D.coefficients(var);  // D has no negative powers of var
  int deg = static_cast<int>(dj.size()) - 1;
  // scaled[j] = d_j * d0^(j-1) for j >= 1
  std::vector<LaurentPolynomial> scaled(static_cast<std::size_t>(std::min(deg, T) + 1));
  LaurentPolynomial d0pow(1L);
  for (int j = 1; j <= std::min(deg, T); ++j) {
    scaled[j] = dj[j] * d0pow;
    d0pow *= d0;
  }
  std::vector<LaurentPolynomial> P(static_cast<std::size_t>(T + 1));
  P[0] = LaurentPolynomial(1L);
  for (int t = 1; t <= T; ++t) {
    LaurentPolynomial acc;
    for (int j = 1; j <= std::min(t, deg); ++j)
      if (!dj[j].is_zero()) acc += scaled[j] * P[t - j];
    P[t] = -acc;
  }
  std::vector<LaurentPolynomial> Nj = N.coefficients(var);
  LaurentPolynomial acc;
  for (int t = 0; t <= T; ++t) {
    acc *= d0;
    int j = c - t - J0;
    if (j >= 0 && j < static_cast<int>(Nj.size()) && !Nj[j].is_zero()) acc += Nj[j] * P[t];
  }
  std::vector<RationalFunction::Factor> fs = outside;
  fs.insert(fs.end(), d0fac.begin(), d0fac.end());
  return RationalFunction::from_parts(acc, fs).gcd_reduce();
}

RationalFunction ct_univariate(const RationalFunction& f, int var) { return coefficient_univariate(f, var, 0); }

RationalFunction res_univariate(const RationalFunction& f, int var) { return coefficient_univariate(f, var, -1); }

RationalFunction coefficient_iterated(const RationalFunction& f, const std::vector<int>& order, int c) {
  RationalFunction g = f;
  for (auto it = order.rbegin(); it != order.rend(); ++it) g = coefficient_univariate(g, *it, c);
  return g;
}

namespace {

Rational scalar_result(const RationalFunction& g) {
  RationalFunction r = g.gcd_reduce();
  if (!r.is_laurent() || !r.num().is_constant()) throw std::logic_error("iterated extraction left variables behind");
  return r.num().constant_term();
}

}  // namespace

Rational ct_iterated(const RationalFunction& f, const std::vector<int>& order) {
  require_vars_in(f, order);
  return scalar_result(coefficient_iterated(f, order, 0));
}

Rational res_iterated(const RationalFunction& f, const std::vector<int>& order) {
  require_vars_in(f, order);
  return scalar_result(coefficient_iterated(f, order, -1));
}

RationalFunction pole_coefficient(const RationalFunction& f, int var, const RationalFunction& point) {
  LaurentPolynomial x = LaurentPolynomial::var(var);
  RationalFunction g;
  if (point.is_zero())
    g = f * RationalFunction(x);
  else
    g = f * (RationalFunction(1L) - RationalFunction(x) / point);
  std::map<int, RationalFunction> at{{var, point}};
  try {
    return g.cancel_exact().substitute(at);
  } catch (const PoleError&) {
  }
  try {
    return g.gcd_reduce().substitute(at);
  } catch (const PoleError&) {
    throw OrderError("pole of order greater than one at " + var_name(var));
  }
}

}  // namespace asmkit
