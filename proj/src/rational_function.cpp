#include "asmkit/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "asmkit/errors.hpp"
#include "asmkit/gcd.hpp"

namespace asmkit {

bool factor_less(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!(ta[i].first == tb[i].first)) return glex_less(ta[i].first, tb[i].first);
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  }
  return false;
}

RationalFunction::RationalFunction(const LaurentPolynomial& p) : num_(p) {}
RationalFunction::RationalFunction(long c) : num_(c) {}
RationalFunction::RationalFunction(const Rational& c) : num_(c) {}

void RationalFunction::sort_factors() {
  std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) { return factor_less(a.poly, b.poly); });
}

void RationalFunction::add_factor(const LaurentPolynomial& p, int exp) {
  if (exp == 0) return;
  if (exp < 0) {
    num_ *= p.pow(-exp);
    return;
  }
  if (p.is_zero()) throw PoleError("zero denominator");
  Rational scale;
  Monomial lo;
  LaurentPolynomial q = normalize_factor(p, &scale, &lo);
  Rational s = 1;
  for (int i = 0; i < exp; ++i) s *= scale;
  num_ /= s;
  num_ = num_.shift(lo.pow(-exp));
  if (q.is_constant()) return;
  for (auto& f : den_)
    if (f.poly == q) {
      f.exp += exp;
      return;
    }
  den_.push_back({std::move(q), exp});
  sort_factors();
}

RationalFunction RationalFunction::fraction(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw PoleError("zero denominator");
  RationalFunction r(num);
  r.add_factor(den, 1);
  return r;
}

RationalFunction RationalFunction::from_parts(const LaurentPolynomial& num, const std::vector<Factor>& factors) {
  RationalFunction r(num);
  for (const auto& f : factors) r.add_factor(f.poly, f.exp);
  return r;
}

LaurentPolynomial RationalFunction::numerator() const {
  if (num_.is_zero()) return num_;
  Monomial lo = num_.min_exponents();
  Monomial g;
  for (int v = 0; v < kMaxVars; ++v) g.e[v] = std::max(0, -lo.e[v]);
  return num_.shift(g);
}

LaurentPolynomial RationalFunction::denominator() const {
  Monomial g;
  if (!num_.is_zero()) {
    Monomial lo = num_.min_exponents();
    for (int v = 0; v < kMaxVars; ++v) g.e[v] = std::max(0, -lo.e[v]);
  }
  LaurentPolynomial d = LaurentPolynomial::monomial(g);
  for (const auto& f : den_) d *= f.poly.pow(f.exp);
  return d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

bool same_factors(const std::vector<RationalFunction::Factor>& a, const std::vector<RationalFunction::Factor>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].exp != b[i].exp || !(a[i].poly == b[i].poly)) return false;
  return true;
}

int find_factor(const std::vector<RationalFunction::Factor>& fs, const LaurentPolynomial& p) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].poly == p) return static_cast<int>(i);
  return -1;
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (same_factors(a.den_, b.den_)) {
    RationalFunction r = a;
    r.num_ += b.num_;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
  }
  // least common multiple by maximal exponents of identical factors
  std::vector<RationalFunction::Factor> lcm = a.den_;
  for (const auto& f : b.den_) {
    int i = find_factor(lcm, f.poly);
    if (i < 0)
      lcm.push_back(f);
    else
      lcm[static_cast<std::size_t>(i)].exp = std::max(lcm[static_cast<std::size_t>(i)].exp, f.exp);
  }
  auto lift = [&](const RationalFunction& x) {
    LaurentPolynomial n = x.num_;
    for (const auto& f : lcm) {
      int i = find_factor(x.den_, f.poly);
      int have = i < 0 ? 0 : x.den_[static_cast<std::size_t>(i)].exp;
      if (f.exp > have) n *= f.poly.pow(f.exp - have);
    }
    return n;
  };
  RationalFunction r;
  r.num_ = lift(a) + lift(b);
  if (!r.num_.is_zero()) {
    r.den_ = std::move(lcm);
    r.sort_factors();
  }
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalFunction r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (const auto& f : b.den_) {
    int i = find_factor(r.den_, f.poly);
    if (i < 0)
      r.den_.push_back(f);
    else
      r.den_[static_cast<std::size_t>(i)].exp += f.exp;
  }
  r.sort_factors();
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw PoleError("inverse of zero");
  LaurentPolynomial n(1L);
  for (const auto& f : den_) n *= f.poly.pow(f.exp);
  RationalFunction r(n);
  r.add_factor(num_, 1);
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw PoleError("division by zero");
  if (a.is_zero()) return {};
  RationalFunction r = a;
  for (const auto& f : b.den_) r.num_ *= f.poly.pow(f.exp);
  r.add_factor(b.num_, 1);
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (same_factors(a.den_, b.den_)) return a.num_ == b.num_;
  return (a - b).is_zero();
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RationalFunction(1L);
  RationalFunction r;
  r.num_ = num_.pow(e);
  if (r.num_.is_zero()) return r;
  r.den_ = den_;
  for (auto& f : r.den_) f.exp *= e;
  return r;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

struct Binding {
  int var;
  LaurentPolynomial n;        // numerator of the bound value
  LaurentPolynomial d;        // expanded denominator product
  std::vector<RationalFunction::Factor> dfac;
  int lo, hi;
  std::map<int, LaurentPolynomial> npow, dpow;
  const LaurentPolynomial& npower(int j) {
    auto it = npow.find(j);
    if (it == npow.end()) it = npow.emplace(j, n.pow(j)).first;
    return it->second;
  }
  const LaurentPolynomial& dpower(int j) {
    auto it = dpow.find(j);
    if (it == dpow.end()) it = dpow.emplace(j, d.pow(j)).first;
    return it->second;
  }
};

LaurentPolynomial horner(const LaurentPolynomial& q, std::vector<Binding>& bs, std::size_t idx) {
  if (idx == bs.size() || q.is_zero()) return q;
  Binding& b = bs[idx];
  if (!q.uses_var(b.var) && b.lo == 0 && b.hi == 0) return horner(q, bs, idx + 1);
  std::vector<LaurentPolynomial> cs = q.coefficients(b.var);
  int qlo = q.min_degree(b.var);
  LaurentPolynomial out;
  for (std::size_t t = 0; t < cs.size(); ++t) {
    if (cs[t].is_zero()) continue;
    int j = qlo + static_cast<int>(t);
    LaurentPolynomial inner = horner(cs[t], bs, idx + 1);
    out += inner * b.npower(j - b.lo) * b.dpower(b.hi - j);
  }
  return out;
}

RationalFunction substitute_poly(const LaurentPolynomial& p, const std::map<int, RationalFunction>& bindings) {
  std::vector<Binding> bs;
  for (const auto& [v, val] : bindings) {
    if (!p.uses_var(v)) continue;
    Binding b;
    b.var = v;
    b.n = val.num();
    b.dfac = val.factors();
    b.d = LaurentPolynomial(1L);
    for (const auto& f : b.dfac) b.d *= f.poly.pow(f.exp);
    b.lo = std::min(0, p.min_degree(v));
    b.hi = std::max(0, p.degree(v));
    if (b.lo < 0 && b.n.is_zero()) throw PoleError("negative power of " + var_name(v) + " bound to zero");
    bs.push_back(std::move(b));
  }
  if (bs.empty()) return RationalFunction(p);
  LaurentPolynomial top = horner(p, bs, 0);
  std::vector<RationalFunction::Factor> fs;
  for (const auto& b : bs) {
    if (b.hi > 0)
      for (const auto& f : b.dfac) fs.push_back({f.poly, f.exp * b.hi});
    if (b.lo < 0) fs.push_back({b.n, -b.lo});
  }
  return RationalFunction::from_parts(top, fs);
}

}  // namespace

RationalFunction RationalFunction::substitute(const std::map<int, RationalFunction>& bindings) const {
  RationalFunction result = substitute_poly(num_, bindings);
  for (const auto& f : den_) {
    RationalFunction v = substitute_poly(f.poly, bindings);
    if (v.is_zero()) throw PoleError("substitution makes the denominator vanish");
    result = result / v.pow(f.exp);
  }
  return result;
}

RationalFunction substitute(const RationalFunction& f, const std::map<int, RationalFunction>& bindings) {
  return f.substitute(bindings);
}

RationalFunction RationalFunction::permute(const std::vector<int>& perm) const {
  RationalFunction r(num_.permute(perm));
  for (const auto& f : den_) r.add_factor(f.poly.permute(perm), f.exp);
  return r;
}

RationalFunction RationalFunction::flip(int var) const {
  int lo = num_.min_degree(var);
  RationalFunction r;
  if (lo < 0) {
    r.num_ = num_.shift(Monomial::var(var, -lo)).flip(var);
    r.add_factor(LaurentPolynomial::bar(var), -lo);
  } else {
    r.num_ = num_.flip(var);
  }
  for (const auto& f : den_) {
    if (f.poly.uses_var(var))
      r.add_factor(f.poly.flip(var), f.exp);
    else
      r.add_factor(f.poly, f.exp);
  }
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RationalFunction bar(const RationalFunction& f, int var) { return f.flip(var); }

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
  Rational v = num_.evaluate(point);
  for (const auto& f : den_) {
    Rational d = f.poly.evaluate(point);
    if (sgn(d) == 0) throw PoleError("evaluation at a pole");
    for (int i = 0; i < f.exp; ++i) v /= d;
  }
  return v;
}

bool RationalFunction::uses_var(int var) const {
  if (num_.uses_var(var)) return true;
  for (const auto& f : den_)
    if (f.poly.uses_var(var)) return true;
  return false;
}

RationalFunction RationalFunction::cancel_exact() const {
  RationalFunction r = *this;
  if (r.num_.is_zero()) {
    r.den_.clear();
    return r;
  }
  LaurentPolynomial q;
  for (auto& f : r.den_)
    while (f.exp > 0 && try_exact_divide(r.num_, f.poly, q)) {
      r.num_ = std::move(q);
      --f.exp;
    }
  std::erase_if(r.den_, [](const Factor& f) { return f.exp == 0; });
  return r;
}

RationalFunction RationalFunction::gcd_reduce() const {
  RationalFunction r = cancel_exact();
  if (r.num_.is_zero() || r.num_.is_monomial()) return r;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < r.den_.size(); ++i) {
      LaurentPolynomial g = poly_gcd(r.num_, r.den_[i].poly);
      if (g.is_constant()) continue;
      LaurentPolynomial rest = exact_divide(r.den_[i].poly, g);
      int e = r.den_[i].exp;
      r.num_ = exact_divide(r.num_, g);
      r.den_.erase(r.den_.begin() + static_cast<std::ptrdiff_t>(i));
      r.add_factor(rest, e);
      r.add_factor(g, e - 1);
      progress = true;
      break;
    }
  }
  std::erase_if(r.den_, [](const Factor& f) { return f.exp == 0; });
  return r;
}

}  // namespace asmkit
