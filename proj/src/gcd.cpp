#include "asmkit/gcd.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace asmkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Arithmetic in Z_p

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const {
    u64 r = a + b;
    return r >= p ? r - p : r;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

// Univariate polynomials over Z_p, low degree first, no trailing zeros.
using UPoly = std::vector<u64>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 ueval(const Field& F, const UPoly& a, u64 x) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

UPoly umul(const Field& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

UPoly uscale(const Field& F, const UPoly& a, u64 c) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

UPoly uadd(const Field& F, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

// Quotient and remainder of a by nonzero b.
void udivmod(const Field& F, UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 inv = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    u64 c = F.mul(a.back(), inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = F.sub(a[i + shift], F.mul(c, b[i]));
    a.pop_back();
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

UPoly umonic(const Field& F, const UPoly& a) {
  if (a.empty()) return a;
  return uscale(F, a, F.inv(a.back()));
}

UPoly ugcd(const Field& F, UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly q, r;
    udivmod(F, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(F, a);
}

// ---------------------------------------------------------------------------
// Multivariate polynomials over Z_p in "coefficient form": a map from the
// exponents of the leading variables to a univariate polynomial in the last one.

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(b, a); }
};

using MPoly = std::map<Monomial, u64, LexGreater>;          // sparse, lex descending
using CForm = std::map<Monomial, UPoly, LexGreater>;        // key has last var zeroed

CForm to_cform(const MPoly& a, int last) {
  CForm cf;
  for (const auto& [m, c] : a) {
    Monomial k = m;
    int d = k.e[last];
    k.e[last] = 0;
    UPoly& u = cf[k];
    if (u.size() <= static_cast<std::size_t>(d)) u.resize(static_cast<std::size_t>(d) + 1, 0);
    u[static_cast<std::size_t>(d)] = c;
  }
  return cf;
}

MPoly from_cform(const CForm& cf, int last) {
  MPoly r;
  for (const auto& [k, u] : cf)
    for (std::size_t d = 0; d < u.size(); ++d)
      if (u[d] != 0) {
        Monomial m = k;
        m.e[last] = static_cast<int32_t>(d);
        r.emplace(m, u[d]);
      }
  return r;
}

MPoly mscale(const Field& F, const MPoly& a, u64 c) {
  MPoly r;
  for (const auto& [m, v] : a) {
    u64 w = F.mul(v, c);
    if (w) r.emplace(m, w);
  }
  return r;
}

bool is_constant(const MPoly& a) { return a.size() == 1 && a.begin()->first.is_one(); }

MPoly pgcd(const Field& F, const MPoly& a, const MPoly& b, int nv, std::mt19937_64& rng);

MPoly univariate_gcd(const Field& F, const MPoly& a, const MPoly& b) {
  CForm ca = to_cform(a, 0), cb = to_cform(b, 0);
  UPoly g = ugcd(F, ca.begin()->second, cb.begin()->second);
  CForm out;
  out[Monomial{}] = g;
  return from_cform(out, 0);
}

// GCD of a, b in Z_p[x_0..x_{nv-1}], both nonzero; the result is defined up to a scalar.
MPoly pgcd(const Field& F, const MPoly& a, const MPoly& b, int nv, std::mt19937_64& rng) {
  if (nv <= 1) return univariate_gcd(F, a, b);
  int last = nv - 1;
  CForm ca = to_cform(a, last), cb = to_cform(b, last);
  UPoly conta, contb;
  for (const auto& [k, u] : ca) conta = ugcd(F, conta, u);
  for (const auto& [k, u] : cb) contb = ugcd(F, contb, u);
  UPoly cont = ugcd(F, conta, contb);
  for (auto& [k, u] : ca) {
    UPoly q, r;
    udivmod(F, u, conta, q, r);
    u = std::move(q);
  }
  for (auto& [k, u] : cb) {
    UPoly q, r;
    udivmod(F, u, contb, q, r);
    u = std::move(q);
  }
  const UPoly& lca = ca.begin()->second;
  const UPoly& lcb = cb.begin()->second;
  UPoly g = ugcd(F, lca, lcb);
  std::size_t dega = 0, degb = 0;
  for (const auto& [k, u] : ca) dega = std::max(dega, u.size() - 1);
  for (const auto& [k, u] : cb) degb = std::max(degb, u.size() - 1);
  std::size_t bound = std::min(dega, degb) + (g.size() - 1);

  auto content_only = [&]() {
    CForm out;
    out[Monomial{}] = cont;
    return from_cform(out, last);
  };
  if (ca.size() == 1 && ca.begin()->first.is_one()) return content_only();
  if (cb.size() == 1 && cb.begin()->first.is_one()) return content_only();

  CForm H;
  UPoly q{1};
  Monomial lmH;
  bool have = false;
  std::size_t count = 0;
  u64 alpha = rng() % F.p;
  for (std::size_t guard = 0; guard < 100000; ++guard) {
    alpha = alpha + 1 == F.p ? 1 : alpha + 1;
    if (ueval(F, lca, alpha) == 0 || ueval(F, lcb, alpha) == 0) continue;
    MPoly aa, bb;
    for (const auto& [k, u] : ca) {
      u64 v = ueval(F, u, alpha);
      if (v) aa.emplace(k, v);
    }
    for (const auto& [k, u] : cb) {
      u64 v = ueval(F, u, alpha);
      if (v) bb.emplace(k, v);
    }
    MPoly c = pgcd(F, aa, bb, nv - 1, rng);
    if (is_constant(c)) return content_only();
    Monomial lm = c.begin()->first;
    c = mscale(F, c, F.mul(ueval(F, g, alpha), F.inv(c.begin()->second)));
    if (!have || lex_less(lm, lmH)) {
      H.clear();
      for (const auto& [k, v] : c) H[k] = UPoly{v};
      q = UPoly{F.neg(alpha), 1};
      lmH = lm;
      have = true;
      count = 1;
    } else if (lex_less(lmH, lm)) {
      continue;
    } else {
      u64 qa_inv = F.inv(ueval(F, q, alpha));
      for (const auto& [k, v] : c) H.try_emplace(k);
      for (auto it = H.begin(); it != H.end();) {
        auto jt = c.find(it->first);
        u64 target = jt == c.end() ? 0 : jt->second;
        u64 diff = F.mul(F.sub(target, ueval(F, it->second, alpha)), qa_inv);
        if (diff) it->second = uadd(F, it->second, uscale(F, q, diff));
        if (it->second.empty())
          it = H.erase(it);
        else
          ++it;
      }
      q = umul(F, q, UPoly{F.neg(alpha), 1});
      ++count;
    }
    if (count > bound) {
      UPoly hc;
      for (const auto& [k, u] : H) hc = ugcd(F, hc, u);
      CForm out;
      for (const auto& [k, u] : H) {
        UPoly qq, rr;
        udivmod(F, u, hc, qq, rr);
        out[k] = umul(F, qq, cont);
      }
      return from_cform(out, last);
    }
  }
  throw std::runtime_error("modular gcd failed to find evaluation points");
}

// ---------------------------------------------------------------------------
// Integer level

struct IntPoly {
  std::vector<std::pair<Monomial, Integer>> terms;
};

MPoly reduce_mod(const IntPoly& a, const Field& F) {
  MPoly r;
  for (const auto& [m, c] : a.terms) {
    u64 v = mpz_fdiv_ui(c.get_mpz_t(), F.p);
    if (v) r.emplace(m, v);
  }
  return r;
}

u64 next_prime_below(u64 start) {
  mpz_class z = static_cast<unsigned long>(start);
  do {
    z -= 1;
  } while (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0);
  return z.get_ui();
}

// Compact variable renaming so the modular recursion sees x_0..x_{m-1}.
struct VarMap {
  std::vector<int> used;
};

Monomial compact(const Monomial& m, const VarMap& vm) {
  Monomial r;
  for (std::size_t i = 0; i < vm.used.size(); ++i) r.e[i] = m.e[vm.used[i]];
  return r;
}

Monomial expand(const Monomial& m, const VarMap& vm) {
  Monomial r;
  for (std::size_t i = 0; i < vm.used.size(); ++i) r.e[vm.used[i]] = m.e[i];
  return r;
}

IntPoly to_int(const LaurentPolynomial& p, const VarMap& vm) {
  IntPoly r;
  for (const auto& [m, c] : p.terms()) r.terms.emplace_back(compact(m, vm), c.get_num());
  return r;
}

Integer lex_lc(const IntPoly& a) {
  const std::pair<Monomial, Integer>* best = &a.terms[0];
  for (const auto& t : a.terms)
    if (lex_less(best->first, t.first)) best = &t;
  return best->second;
}

}  // namespace

LaurentPolynomial normalize_factor(const LaurentPolynomial& p, Rational* scale, Monomial* shift) {
  if (p.is_zero()) {
    if (scale) *scale = 0;
    if (shift) *shift = Monomial{};
    return p;
  }
  Monomial lo = p.min_exponents();
  Rational c = p.content();
  if (sgn(p.leading_term().second) < 0) c = -c;
  LaurentPolynomial r = p.shift(Monomial{} / lo) / c;
  if (scale) *scale = c;
  if (shift) *shift = lo;
  return r;
}

LaurentPolynomial poly_gcd(const LaurentPolynomial& a0, const LaurentPolynomial& b0) {
  if (a0.is_zero()) return normalize_factor(b0);
  if (b0.is_zero()) return normalize_factor(a0);
  LaurentPolynomial a = normalize_factor(a0), b = normalize_factor(b0);
  if (a.is_constant() || b.is_constant()) return LaurentPolynomial(1L);
  if (a == b) return a;
  LaurentPolynomial quot;
  if (a.size() <= b.size()) {
    if (try_exact_divide(b, a, quot)) return a;
  } else {
    if (try_exact_divide(a, b, quot)) return b;
  }
  VarMap vm;
  for (int v = 0; v < kMaxVars; ++v)
    if (a.uses_var(v) || b.uses_var(v)) vm.used.push_back(v);
  int nv = static_cast<int>(vm.used.size());
  IntPoly A = to_int(a, vm), B = to_int(b, vm);
  Integer g;
  mpz_gcd(g.get_mpz_t(), lex_lc(A).get_mpz_t(), lex_lc(B).get_mpz_t());
  Integer lcA = lex_lc(A), lcB = lex_lc(B);

  std::mt19937_64 rng(0x5eed1234abcdULL);
  u64 prime = u64{1} << 62;
  std::map<Monomial, Integer, LexGreater> H;
  Integer M = 0;
  Monomial lmH;
  for (int attempt = 0; attempt < 2000; ++attempt) {
    prime = next_prime_below(prime);
    Field F{prime};
    if (mpz_fdiv_ui(lcA.get_mpz_t(), prime) == 0 || mpz_fdiv_ui(lcB.get_mpz_t(), prime) == 0) continue;
    MPoly ap = reduce_mod(A, F), bp = reduce_mod(B, F);
    MPoly c = pgcd(F, ap, bp, nv, rng);
    if (is_constant(c)) return LaurentPolynomial(1L);
    Monomial lm = c.begin()->first;
    c = mscale(F, c, F.mul(mpz_fdiv_ui(g.get_mpz_t(), prime), F.inv(c.begin()->second)));
    if (M == 0 || lex_less(lm, lmH)) {
      H.clear();
      Integer half = Integer(static_cast<unsigned long>(prime)) / 2;
      for (const auto& [m, v] : c) {
        Integer z = static_cast<unsigned long>(v);
        if (z > half) z -= static_cast<unsigned long>(prime);
        H.emplace(m, z);
      }
      M = static_cast<unsigned long>(prime);
      lmH = lm;
      continue;
    }
    if (lex_less(lmH, lm)) continue;
    // Chinese remaindering in the symmetric range.
    Integer P = static_cast<unsigned long>(prime);
    Integer Minv;
    Integer Mmod = M % P;
    mpz_invert(Minv.get_mpz_t(), Mmod.get_mpz_t(), P.get_mpz_t());
    Integer newM = M * P, half = newM / 2;
    bool changed = false;
    for (const auto& [m, v] : c) H.try_emplace(m, 0);
    for (auto it = H.begin(); it != H.end();) {
      auto jt = c.find(it->first);
      Integer target = jt == c.end() ? 0UL : static_cast<unsigned long>(jt->second);
      Integer cur = it->second;
      Integer diff = (target - cur) % P;
      if (diff < 0) diff += P;
      Integer t = diff * Minv % P;
      Integer z = cur + M * t;
      z %= newM;
      if (z < 0) z += newM;
      if (z > half) z -= newM;
      if (z != cur) changed = true;
      it->second = z;
      if (z == 0)
        it = H.erase(it);
      else
        ++it;
    }
    M = newM;
    if (!changed) {
      std::vector<LaurentPolynomial::Term> terms;
      for (const auto& [m, z] : H) terms.emplace_back(expand(m, vm), Rational(z));
      LaurentPolynomial cand = normalize_factor(LaurentPolynomial::from_terms(std::move(terms)));
      LaurentPolynomial qa, qb;
      if (try_exact_divide(a, cand, qa) && try_exact_divide(b, cand, qb)) return cand;
      M = 0;  // inconsistent images; start over with fresh primes
    }
  }
  throw std::runtime_error("modular gcd did not converge");
}

}  // namespace asmkit
