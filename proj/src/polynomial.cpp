#include "asmkit/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>

#include "asmkit/errors.hpp"

namespace asmkit {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(int i, int power) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index out of range: " + std::to_string(i));
  Monomial m;
  m.e[i] = power;
  return m;
}

int Monomial::total() const {
  int t = 0;
  for (int v : e) t += v;
  return t;
}

bool Monomial::is_one() const {
  for (int v : e)
    if (v != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

Monomial Monomial::pow(int p) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] * p;
  return r;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

bool glex_less(const Monomial& a, const Monomial& b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return lex_less(a, b);
}

Monomial min_monomial(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

Monomial max_monomial(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : m.e) {
    h ^= static_cast<std::uint32_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::string var_name(int i) { return "x" + std::to_string(i + 1); }

namespace {

bool term_less(const LaurentPolynomial::Term& a, const LaurentPolynomial::Term& b) {
  return glex_less(a.first, b.first);
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyBuilder

PolyBuilder::PolyBuilder(std::size_t reserve) {
  index_.reserve(reserve);
  terms_.reserve(reserve);
}

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = index_.try_emplace(m, terms_.size());
  if (inserted)
    terms_.emplace_back(m, c);
  else
    terms_[it->second].second += c;
}

void PolyBuilder::add(const LaurentPolynomial& p) {
  for (const auto& [m, c] : p.terms()) add(m, c);
}

void PolyBuilder::add_scaled(const LaurentPolynomial& p, const Rational& scale) {
  if (sgn(scale) == 0) return;
  Rational t;
  for (const auto& [m, c] : p.terms()) {
    mpq_mul(t.get_mpq_t(), c.get_mpq_t(), scale.get_mpq_t());
    add(m, t);
  }
}

LaurentPolynomial PolyBuilder::build() {
  LaurentPolynomial r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_)
    if (sgn(t.second) != 0) r.terms_.push_back(std::move(t));
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  terms_.clear();
  index_.clear();
  return r;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial basics

LaurentPolynomial::LaurentPolynomial(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, Rational(c));
}

LaurentPolynomial::LaurentPolynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial{}, c);
}

LaurentPolynomial LaurentPolynomial::var(int i) { return monomial(Monomial::var(i)); }

LaurentPolynomial LaurentPolynomial::bar(int i) { return LaurentPolynomial(1L) - var(i); }

LaurentPolynomial LaurentPolynomial::monomial(const Monomial& m, const Rational& c) {
  LaurentPolynomial r;
  if (sgn(c) != 0) r.terms_.emplace_back(m, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  LaurentPolynomial r;
  r.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first)
      r.terms_.back().second += t.second;
    else
      r.terms_.push_back(std::move(t));
  }
  std::erase_if(r.terms_, [](const Term& t) { return sgn(t.second) == 0; });
  return r;
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational LaurentPolynomial::constant_term() const {
  for (const auto& [m, c] : terms_)
    if (m.is_one()) return c;
  return 0;
}

const LaurentPolynomial::Term& LaurentPolynomial::lex_leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (lex_less(best->first, t.first)) best = &t;
  return *best;
}

int LaurentPolynomial::degree(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first.e[var];
  for (const auto& t : terms_) d = std::max(d, t.first.e[var]);
  return d;
}

int LaurentPolynomial::min_degree(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first.e[var];
  for (const auto& t : terms_) d = std::min(d, t.first.e[var]);
  return d;
}

int LaurentPolynomial::total_degree() const { return terms_.empty() ? 0 : terms_.back().first.total(); }

Monomial LaurentPolynomial::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].first;
  for (const auto& t : terms_) m = min_monomial(m, t.first);
  return m;
}

Monomial LaurentPolynomial::max_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].first;
  for (const auto& t : terms_) m = max_monomial(m, t.first);
  return m;
}

bool LaurentPolynomial::uses_var(int var) const {
  for (const auto& t : terms_)
    if (t.first.e[var] != 0) return true;
  return false;
}

int LaurentPolynomial::num_vars() const {
  int n = 0;
  for (const auto& t : terms_)
    for (int i = kMaxVars - 1; i >= n; --i)
      if (t.first.e[i] != 0) {
        n = i + 1;
        break;
      }
  return n;
}

bool LaurentPolynomial::has_negative_exponents() const {
  for (const auto& t : terms_)
    for (int v : t.first.e)
      if (v < 0) return true;
  return false;
}

bool LaurentPolynomial::is_integral() const {
  for (const auto& t : terms_)
    if (t.second.get_den() != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Arithmetic

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<LaurentPolynomial::Term> merge_terms(const std::vector<LaurentPolynomial::Term>& a,
                                                 const std::vector<LaurentPolynomial::Term>& b, bool subtract) {
  std::vector<LaurentPolynomial::Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && glex_less(a[i].first, b[j].first))) {
      r.push_back(a[i++]);
    } else if (i == a.size() || glex_less(b[j].first, a[i].first)) {
      r.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (sgn(c) != 0) r.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

// Dense packing of integer polynomials into one big integer (Kronecker substitution).
struct KroneckerLayout {
  std::vector<int> vars;
  std::vector<std::int64_t> stride;
  std::vector<int> range;
  std::int64_t slots = 1;
};

void pack(const std::vector<LaurentPolynomial::Term>& terms, const Rational& scale, const Monomial& lo,
          const KroneckerLayout& lay, int limbs, mpz_class& out) {
  std::vector<mp_limb_t> pos(static_cast<std::size_t>(lay.slots) * limbs, 0);
  std::vector<mp_limb_t> neg(static_cast<std::size_t>(lay.slots) * limbs, 0);
  mpz_class c;
  for (const auto& [m, q] : terms) {
    std::int64_t idx = 0;
    for (std::size_t v = 0; v < lay.vars.size(); ++v) idx += (m.e[lay.vars[v]] - lo.e[lay.vars[v]]) * lay.stride[v];
    mpq_class s = q * scale;
    c = s.get_num();
    auto& dst = sgn(c) >= 0 ? pos : neg;
    c = abs(c);
    std::size_t count = 0;
    mpz_export(dst.data() + idx * limbs, &count, -1, sizeof(mp_limb_t), 0, 0, c.get_mpz_t());
  }
  mpz_class p, n;
  mpz_import(p.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
  mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
  out = p - n;
}

std::size_t coeff_bits(const std::vector<LaurentPolynomial::Term>& terms, const Rational& scale) {
  std::size_t b = 0;
  for (const auto& [m, q] : terms) {
    mpq_class s = q * scale;
    b = std::max(b, mpz_sizeinbase(s.get_num_mpz_t(), 2));
  }
  return b;
}

mpz_class den_lcm(const std::vector<LaurentPolynomial::Term>& terms) {
  mpz_class l = 1;
  for (const auto& t : terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  return l;
}

bool kronecker_multiply(const LaurentPolynomial& a, const LaurentPolynomial& b, LaurentPolynomial& out) {
  Monomial alo = a.min_exponents(), ahi = a.max_exponents();
  Monomial blo = b.min_exponents(), bhi = b.max_exponents();
  KroneckerLayout lay;
  for (int v = 0; v < kMaxVars; ++v) {
    int r = (ahi.e[v] - alo.e[v]) + (bhi.e[v] - blo.e[v]) + 1;
    if (r <= 1) continue;
    lay.vars.push_back(v);
    lay.range.push_back(r);
    lay.stride.push_back(lay.slots);
    lay.slots *= r;
    if (lay.slots > (std::int64_t{1} << 26)) return false;
  }
  double work = static_cast<double>(a.size()) * static_cast<double>(b.size());
  if (static_cast<double>(lay.slots) > 16.0 * work) return false;
  Rational sa(den_lcm(a.terms())), sb(den_lcm(b.terms()));
  std::size_t bits = coeff_bits(a.terms(), sa) + coeff_bits(b.terms(), sb) + 2;
  std::size_t m = std::min(a.size(), b.size());
  while (m > 0) {
    ++bits;
    m >>= 1;
  }
  int limbs = static_cast<int>((bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS);
  if (static_cast<double>(lay.slots) * limbs > static_cast<double>(std::int64_t{1} << 25)) return false;
  mpz_class pa, pb;
  pack(a.terms(), sa, alo, lay, limbs, pa);
  pack(b.terms(), sb, blo, lay, limbs, pb);
  mpz_class prod = pa * pb;
  bool negate = sgn(prod) < 0;
  if (negate) prod = -prod;
  std::size_t nlimbs = mpz_size(prod.get_mpz_t());
  std::vector<mp_limb_t> limb(static_cast<std::size_t>(lay.slots) * limbs + 1, 0);
  if (nlimbs > limb.size()) return false;
  std::size_t count = 0;
  mpz_export(limb.data(), &count, -1, sizeof(mp_limb_t), 0, 0, prod.get_mpz_t());
  Rational scale = 1 / (sa * sb);
  if (negate) scale = -scale;
  Monomial lo = alo * blo;
  std::vector<LaurentPolynomial::Term> terms;
  mpz_class digit, half, full;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, static_cast<unsigned long>(limbs) * GMP_NUMB_BITS);
  half = full / 2;
  int carry = 0;
  std::vector<int> ctr(lay.vars.size(), 0);
  for (std::int64_t s = 0; s < lay.slots; ++s) {
    const mp_limb_t* src = limb.data() + s * limbs;
    bool zero = carry == 0;
    for (int l = 0; l < limbs && zero; ++l) zero = src[l] == 0;
    if (!zero) {
      mpz_import(digit.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, src);
      digit += carry;
      if (digit >= half) {
        digit -= full;
        carry = 1;
      } else {
        carry = 0;
      }
      if (sgn(digit) != 0) {
        Monomial mm = lo;
        for (std::size_t v = 0; v < lay.vars.size(); ++v) mm.e[lay.vars[v]] += ctr[v];
        terms.emplace_back(mm, Rational(digit) * scale);
      }
    }
    for (std::size_t v = 0; v < ctr.size(); ++v) {
      if (++ctr[v] < lay.range[v]) break;
      ctr[v] = 0;
    }
  }
  std::sort(terms.begin(), terms.end(), term_less);
  out = LaurentPolynomial::from_terms(std::move(terms));
  return true;
}

}  // namespace

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 || b.size() == 1) {
    const LaurentPolynomial& mono = a.size() == 1 ? a : b;
    const LaurentPolynomial& other = a.size() == 1 ? b : a;
    const auto& [m, c] = mono.terms_[0];
    LaurentPolynomial r;
    r.terms_.reserve(other.size());
    for (const auto& [om, oc] : other.terms_) r.terms_.emplace_back(om * m, oc * c);
    return r;  // multiplying by a monomial preserves glex order
  }
  if (a.size() * b.size() > 4096) {
    LaurentPolynomial r;
    if (kronecker_multiply(a, b, r)) return r;
  }
  PolyBuilder builder(a.size() + b.size());
  Rational t;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      builder.add(ma * mb, t);
    }
  return builder.build();
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator/=(const Rational& c) {
  if (sgn(c) == 0) throw std::domain_error("division by zero");
  for (auto& t : terms_) t.second /= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::shift(const Monomial& m) const {
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw UnsupportedOperation("negative power of a non-monomial");
    const auto& [m, c] = terms_[0];
    Rational ce = 1;
    for (int i = 0; i < -e; ++i) ce /= c;
    return monomial(m.pow(e), ce);
  }
  if (is_monomial()) {
    const auto& [m, c] = terms_[0];
    Rational ce = 1;
    for (int i = 0; i < e; ++i) ce *= c;
    return monomial(m.pow(e), ce);
  }
  LaurentPolynomial result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::coefficient(int var, int j) const {
  LaurentPolynomial r;
  for (const auto& [m, c] : terms_)
    if (m.e[var] == j) {
      Monomial mm = m;
      mm.e[var] = 0;
      r.terms_.emplace_back(mm, c);
    }
  // removing a fixed power of var keeps the relative glex order
  return r;
}

std::vector<LaurentPolynomial> LaurentPolynomial::coefficients(int var) const {
  if (terms_.empty()) return {};
  int lo = min_degree(var), hi = degree(var);
  std::vector<LaurentPolynomial> out(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.e[var] = 0;
    out[static_cast<std::size_t>(m.e[var] - lo)].terms_.emplace_back(mm, c);
  }
  return out;
}

Rational LaurentPolynomial::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < kMaxVars; ++v) {
      int d = m.e[v];
      if (d == 0) continue;
      if (static_cast<std::size_t>(v) >= point.size()) throw std::out_of_range("evaluation point too short");
      const Rational& x = point[static_cast<std::size_t>(v)];
      if (d < 0 && sgn(x) == 0) throw PoleError("negative power of a variable evaluated at zero");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(std::abs(d)));
      mpz_pow_ui(p.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(std::abs(d)));
      p.canonicalize();
      if (d > 0)
        t *= p;
      else
        t /= p;
    }
    total += t;
  }
  return total;
}

LaurentPolynomial LaurentPolynomial::evaluate_var(int var, const Rational& value) const {
  if (sgn(value) == 0 && min_degree(var) < 0) throw PoleError("negative power of " + var_name(var) + " at zero");
  PolyBuilder b(terms_.size());
  std::map<int, Rational> powers;
  for (const auto& [m, c] : terms_) {
    int d = m.e[var];
    auto it = powers.find(d);
    if (it == powers.end()) {
      Rational p = 1;
      for (int i = 0; i < std::abs(d); ++i) p *= value;
      if (d < 0) p = 1 / p;
      it = powers.emplace(d, p).first;
    }
    Monomial mm = m;
    mm.e[var] = 0;
    b.add(mm, c * it->second);
  }
  return b.build();
}

LaurentPolynomial LaurentPolynomial::permute(const std::vector<int>& perm) const {
  LaurentPolynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    for (std::size_t i = 0; i < perm.size(); ++i) mm.e[i] = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) mm.e[perm[i]] = m.e[i];
    r.terms_.emplace_back(mm, c);
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  return r;
}

LaurentPolynomial LaurentPolynomial::flip(int var) const {
  if (min_degree(var) < 0) throw UnsupportedOperation("flip of a negative power of " + var_name(var));
  int deg = degree(var);
  std::vector<std::vector<Integer>> binom(static_cast<std::size_t>(deg + 1));
  for (int d = 0; d <= deg; ++d) {
    binom[d].resize(static_cast<std::size_t>(d + 1));
    binom[d][0] = 1;
    for (int j = 1; j <= d; ++j) binom[d][j] = binom[d][j - 1] * (d - j + 1) / j;
  }
  PolyBuilder b(terms_.size() * 2);
  Rational t;
  for (const auto& [m, c] : terms_) {
    int d = m.e[var];
    Monomial mm = m;
    for (int j = 0; j <= d; ++j) {
      mm.e[var] = j;
      t = c * binom[d][j];
      if (j & 1) t = -t;
      b.add(mm, t);
    }
  }
  return b.build();
}

LaurentPolynomial LaurentPolynomial::substitute_var(int var, const LaurentPolynomial& value) const {
  if (min_degree(var) < 0 && !value.is_monomial())
    throw UnsupportedOperation("negative power of " + var_name(var) + " under a non-monomial substitution");
  std::vector<LaurentPolynomial> coeffs = coefficients(var);
  if (coeffs.empty()) return {};
  int lo = min_degree(var);
  LaurentPolynomial result;
  // Horner in value, then the monomial offset value^lo
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    result = result * value + coeffs[j];
  }
  if (lo != 0) result *= value.pow(lo);
  return result;
}

Rational LaurentPolynomial::content() const {
  if (terms_.empty()) return 0;
  mpz_class g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Exact division

namespace {

struct GlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return glex_less(b, a); }
};

bool divides_monomial(const Monomial& d, const Monomial& m) {
  for (int i = 0; i < kMaxVars; ++i)
    if (d.e[i] > m.e[i]) return false;
  return true;
}

}  // namespace

bool try_exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q, LaurentPolynomial& out) {
  if (q.is_zero()) throw std::domain_error("exact_divide by zero");
  if (p.is_zero()) {
    out = LaurentPolynomial();
    return true;
  }
  if (q.is_monomial()) {
    const auto& [m, c] = q.terms()[0];
    out = p.shift(Monomial{} / m) / c;
    return true;
  }
  // Work with the polynomial parts p', q' obtained by removing monomial content.
  Monomial pa = p.min_exponents(), qa = q.min_exponents();
  LaurentPolynomial pp = p.shift(Monomial{} / pa), qq = q.shift(Monomial{} / qa);
  Monomial pmax = pp.max_exponents(), qmax = qq.max_exponents();
  for (int v = 0; v < kMaxVars; ++v)
    if (qmax.e[v] > pmax.e[v]) return false;
  if (pp.total_degree() < qq.total_degree()) return false;
  const auto& [qlm, qlc] = qq.leading_term();
  std::map<Monomial, Rational, GlexGreater> rem;
  for (const auto& [m, c] : pp.terms()) rem.emplace(m, c);
  std::vector<LaurentPolynomial::Term> quot;
  Rational t;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!divides_monomial(qlm, it->first)) return false;
    Monomial qm = it->first / qlm;
    for (int v = 0; v < kMaxVars; ++v)
      if (qm.e[v] + qmax.e[v] > pmax.e[v]) return false;
    Rational qc = it->second / qlc;
    rem.erase(it);
    for (const auto& [m, c] : qq.terms()) {
      if (m == qlm) continue;
      mpq_mul(t.get_mpq_t(), c.get_mpq_t(), qc.get_mpq_t());
      Monomial mm = m * qm;
      auto [jt, inserted] = rem.try_emplace(mm, 0);
      jt->second -= t;
      if (sgn(jt->second) == 0) rem.erase(jt);
    }
    quot.emplace_back(qm, std::move(qc));
  }
  Monomial offset = pa / qa;
  for (auto& tm : quot) tm.first = tm.first * offset;
  out = LaurentPolynomial::from_terms(std::move(quot));
  return true;
}

LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  LaurentPolynomial r;
  if (!try_exact_divide(p, q, r)) throw DivisibilityError("polynomial is not divisible");
  return r;
}

}  // namespace asmkit
