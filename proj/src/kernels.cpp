#include "asmkit/kernels.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "asmkit/errors.hpp"
#include "asmkit/group.hpp"

namespace asmkit {

namespace {

using Factor = RationalFunction::Factor;

Poly X(int v) { return Poly::var(v); }
Poly XB(int v) { return Poly::bar(v); }
Poly one() { return Poly(1L); }

Poly xpow(int v, int e) { return Poly::monomial(Monomial::var(v, e)); }

std::vector<int> first_vars(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

void check_rank(int k) {
  if (k < 0 || k > kMaxVars) throw DomainError("rank out of range: " + std::to_string(k));
}

/// Relocates a polynomial in x1..xk to the listed variables.
Poly relocate(const Poly& p, const std::vector<int>& vars) { return p.permute(vars); }

template <class F>
Poly cached(std::map<int, Poly>& cache, std::mutex& mu, int k, F make) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  Poly p = make();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(k, p);
  return p;
}

/// prod_{i<j} (1 - x_i x_j)(1 - xb_i x_j) as denominator factors.
void gog_pair_factors(int k, std::vector<Factor>& fs) {
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      fs.push_back({one() - X(i) * X(j), 1});
      fs.push_back({one() - XB(i) * X(j), 1});
    }
}

void check_border(int k, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != k) throw DomainError("border vector must have k entries");
}

}  // namespace

BlockStructure BlockStructure::from_vector(const std::vector<int>& a) {
  BlockStructure b;
  int k = static_cast<int>(a.size());
  for (int i = 0; i < k; ++i) {
    if (i + 1 < k && a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(i + 1)])
      throw DomainError("block structure of a vector that is not non-increasing");
    if (i + 1 == k || a[static_cast<std::size_t>(i)] != a[static_cast<std::size_t>(i + 1)]) b.r.push_back(i + 1);
  }
  return b;
}

bool BlockStructure::is_valid() const {
  if (r.empty()) return false;
  int prev = 0;
  for (int x : r) {
    if (x <= prev) return false;
    prev = x;
  }
  return prev <= kMaxVars;
}

// ---------------------------------------------------------------------------
// Kernel polynomials

Poly delta_on(const std::vector<int>& vars) {
  Poly d(1L);
  for (std::size_t i = 0; i < vars.size(); ++i) d *= one() - 2L * X(vars[i]);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      d *= (X(vars[j]) - X(vars[i])) * (X(vars[j]) + X(vars[i]) - one());
  return d;
}

Poly delta(int k) {
  check_rank(k);
  return delta_on(first_vars(k));
}

Poly vandermonde(int k) {
  check_rank(k);
  Poly d(1L);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) d *= X(j) - X(i);
  return d;
}

Poly vandermonde_expansion(int k) {
  check_rank(k);
  Poly m(1L);
  for (int i = 0; i < k; ++i) m *= xpow(i, i);
  return antisymmetrize(m, Group::Symmetric, k);
}

Poly phi(int k) {
  check_rank(k);
  static std::map<int, Poly> cache;
  static std::mutex mu;
  return cached(cache, mu, k, [k] {
    Poly p(1L);
    for (int i = 0; i < k; ++i) p *= XB(i).pow(k - 1 - i) * xpow(i, k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) p *= (one() - X(i) * XB(j)) * (one() - XB(i) * XB(j));
    Poly s = antisymmetrize(p, Group::Hyperoctahedral, k);
    return k % 2 ? -s : s;
  });
}

Poly phi_on(const std::vector<int>& vars) { return relocate(phi(static_cast<int>(vars.size())), vars); }

Poly psi(int k) {
  check_rank(k);
  Poly p(1L);
  for (int i = 0; i < k; ++i) p *= xpow(i, k - 1 - i) * XB(i).pow(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) p *= (one() - XB(i) * X(j)) * (one() - X(i) * X(j));
  return antisymmetrize(p, Group::Symmetric, k);
}

Poly omega(int k) {
  check_rank(k);
  static std::map<int, Poly> cache;
  static std::mutex mu;
  return cached(cache, mu, k, [k] { return exact_divide(phi(k), delta(k)); });
}

Poly omega_on(const std::vector<int>& vars) { return relocate(omega(static_cast<int>(vars.size())), vars); }

Poly magog_antisymmetrized(int k) {
  check_rank(k);
  static std::map<int, Poly> cache;
  static std::mutex mu;
  return cached(cache, mu, k, [k] {
    Poly p(1L);
    for (int i = 0; i < k; ++i) p *= xpow(i, i + 2);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        p *= (one() - XB(i) * X(j)) * (one() - X(i) * XB(j)) * (one() - XB(i) * XB(j));
    return antisymmetrize(p, Group::Hyperoctahedral, k);
  });
}

// ---------------------------------------------------------------------------
// Block structures

Poly jamie(const BlockStructure& blocks) {
  if (!blocks.is_valid()) throw DomainError("invalid block structure");
  int k = blocks.k();
  Poly first(1L), all(1L), inner(1L);
  for (int r : blocks.r) first *= XB(r - 1);
  for (int i = 0; i < k; ++i) all *= XB(i);
  int prev = 0;
  for (int r : blocks.r) {
    for (int i = prev + 2; i <= r; ++i) inner *= X(i - 1);
    prev = r;
  }
  return first - all * inner;
}

std::vector<JamieTerm> jamie_decomposition(const BlockStructure& blocks) {
  if (!blocks.is_valid()) throw DomainError("invalid block structure");
  std::vector<JamieTerm> out;
  Poly heads(1L);
  for (int r : blocks.r) heads *= XB(r - 1);
  // ratio(i) = xb_{i-1} x_i, one-based i
  auto ratio = [](int i) { return XB(i - 2) * X(i - 1); };
  Poly earlier(1L);
  int prev = 0;
  for (int r : blocks.r) {
    for (int p = prev + 2; p <= r; ++p) {
      Poly later(1L);
      for (int i = p + 1; i <= r; ++i) later *= ratio(i);
      out.push_back({p, exact_divide(heads * earlier * later, XB(p - 1))});
    }
    for (int i = prev + 2; i <= r; ++i) earlier *= ratio(i);
    prev = r;
  }
  return out;
}

Poly jamie_term_value(const JamieTerm& t) { return t.pol * XB(t.p - 1) * (one() - XB(t.p - 2) * X(t.p - 1)); }

// ---------------------------------------------------------------------------
// Integrands

RatFun t_rational(int k, int n) {
  check_rank(k);
  Poly num(1L);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    num *= xpow(i, -(n + k + 1));
    fs.push_back({XB(i), n + k + 1});
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      fs.push_back({one() - X(i) * X(j), 1});
      fs.push_back({one() - XB(i) * X(j), 1});
      fs.push_back({one() - X(i) * XB(j), 1});
      fs.push_back({one() - XB(i) * XB(j), 1});
    }
  return RatFun::from_parts(num, fs);
}

RatFun magog_total(int k, int n) {
  check_rank(k);
  Poly num = delta(k);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    num *= xpow(i, -(n + k - (i + 1) - 1));
    fs.push_back({XB(i), n + k + 1});
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) fs.push_back({one() - X(i) * X(j), 1});
  return RatFun::from_parts(num, fs);
}

RatFun magog_border(int k, int n, const std::vector<int>& a) {
  check_rank(k);
  check_border(k, a);
  Poly num = delta(k);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    num *= xpow(i, -(a[static_cast<std::size_t>(i)] + k - (i + 1) - 1));
    fs.push_back({XB(i), k + n});
  }
  return RatFun::from_parts(num, fs);
}

RatFun george(int k, int n) {
  check_rank(k);
  Poly num = delta(k);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    num *= xpow(i, (i + 1) - (n + k - 1));
    fs.push_back({XB(i), k + n});
  }
  Poly tail(1L);
  for (int i = k - 1; i >= 0; --i) {
    tail *= X(i);
    fs.push_back({one() - tail, 1});
  }
  return RatFun::from_parts(num, fs);
}

RatFun magog_res(int k, int n) {
  check_rank(k);
  Poly num = delta(k);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    num *= xpow(i, -(n + k - (i + 1)));
    fs.push_back({XB(i), n + k + 1});
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) fs.push_back({one() - X(i) * X(j), 1});
  return RatFun::from_parts(num, fs);
}

RatFun gog_total(int k, int n) {
  check_rank(k);
  Poly num = phi(k);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    num *= xpow(i, -n);
    fs.push_back({XB(i), n + (i + 1) + 1});
  }
  gog_pair_factors(k, fs);
  return RatFun::from_parts(num, fs);
}

RatFun gog_border(int k, int n, const std::vector<int>& a) {
  check_rank(k);
  check_border(k, a);
  Poly num = phi(k);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    num *= xpow(i, -(a[static_cast<std::size_t>(i)] - 1));
    fs.push_back({XB(i), n + (i + 1)});
  }
  gog_pair_factors(k, fs);
  return RatFun::from_parts(num, fs);
}

RatFun gog_res(int k, int n) {
  check_rank(k);
  Poly num = phi(k);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    num *= xpow(i, -(n + 1));
    fs.push_back({XB(i), n + (i + 1) + 1});
  }
  gog_pair_factors(k, fs);
  return RatFun::from_parts(num, fs);
}

RatFun magog_avg(int k, int n) { return t_rational(k, n) * RatFun(delta(k) * magog_antisymmetrized(k)); }

RatFun gog_avg(int k, int n) {
  Poly p = phi(k);
  return t_rational(k, n) * RatFun(p * p);
}

Rational magog_avg_scale(int k) {
  Integer d = 1;
  for (int i = 1; i <= k; ++i) d *= 2 * i;
  return Rational(1, d);
}

Rational gog_avg_scale(int k) { return k % 2 ? Rational(-magog_avg_scale(k)) : magog_avg_scale(k); }

RatFun efes_residuand(int k, const std::vector<int>& a) {
  check_rank(k);
  check_border(k, a);
  Poly num = delta(k);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    num *= xpow(i, k - a[static_cast<std::size_t>(i)] + (i + 1) - 2 * k);
    fs.push_back({XB(i), 2 * k});
  }
  return RatFun::from_parts(num, fs);
}

RatFun dave(int k, int n, const std::vector<int>& a) {
  return RatFun(jamie(BlockStructure::from_vector(a))) * gog_border(k, n, a);
}

RatFun h2b(int k, int n, const std::vector<int>& tail) {
  check_rank(k);
  if (static_cast<int>(tail.size()) != k - 1) throw DomainError("h2b expects k - 1 border entries");
  Poly num = phi(k) * xpow(0, -n);
  std::vector<Factor> fs{{XB(0), n + 1}};
  for (int i = 1; i < k; ++i) {
    num *= xpow(i, -(tail[static_cast<std::size_t>(i - 1)] - 1));
    fs.push_back({one() - X(0) * X(i), 1});
    fs.push_back({one() - XB(0) * X(i), 1});
  }
  return RatFun::from_parts(num, fs);
}

RatFun issai_lhs(int k) {
  check_rank(k);
  Poly num(1L);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) num *= xpow(i, i + 1);
  Poly tail(1L);
  for (int i = k - 1; i >= 0; --i) {
    tail *= X(i);
    fs.push_back({one() - tail, 1});
  }
  return antisymmetrize(RatFun::from_parts(num, fs), Group::Symmetric, k);
}

RatFun issai_rhs(int k) {
  check_rank(k);
  Poly num = vandermonde(k);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    num *= X(i);
    fs.push_back({XB(i), 1});
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) fs.push_back({one() - X(i) * X(j), 1});
  return RatFun::from_parts(num, fs);
}

RatFun l_kernel_on(const std::vector<int>& vars) {
  int k = static_cast<int>(vars.size());
  Poly num(1L);
  std::vector<Factor> fs;
  for (int i = 0; i < k; ++i) {
    int v = vars[static_cast<std::size_t>(i)];
    num *= X(v) * X(v);
    fs.push_back({one() - 2L * X(v), 1});
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int u = vars[static_cast<std::size_t>(i)], v = vars[static_cast<std::size_t>(j)];
      num *= (one() - XB(u) * X(v)) * (one() - X(u) * XB(v)) * (one() - XB(u) * XB(v));
      fs.push_back({X(v) + X(u) - one(), 1});
    }
  RatFun s = RatFun::from_parts(num, fs);
  for (int v : vars) s = s + s.flip(v);
  return k % 2 ? -s : s;
}

RatFun l_kernel(int k) {
  check_rank(k);
  return l_kernel_on(first_vars(k));
}

// ---------------------------------------------------------------------------
// Partial fractions at a pole of the residue integrands

Poly z_var(int v, int eps) { return eps > 0 ? X(v) : XB(v); }

namespace {

struct PoleSetup {
  int k, R, i;  // R, i one-based
  std::vector<int> rest;  // zero-based indices other than i and R, increasing
  Poly zi, zbi;
  Poly z(int j) const { return z_var(j - 1, eps[static_cast<std::size_t>(j - 1)]); }
  Poly zb(int j) const { return one() - z(j); }
  std::vector<int> eps;
};

PoleSetup pole_setup(int k, int R, int i, const std::vector<int>& eps) {
  check_rank(k);
  if (R < 1 || R > k || i < 1 || i > k || i == R) throw DomainError("pole indices out of range");
  if (static_cast<int>(eps.size()) != k) throw DomainError("sign vector must have k entries");
  PoleSetup s{k, R, i, {}, {}, {}, eps};
  for (int j = 1; j <= k; ++j)
    if (j != i && j != R) s.rest.push_back(j - 1);
  s.zi = s.z(i);
  s.zbi = one() - s.zi;
  return s;
}

RatFun over_power(const Poly& num, const Poly& base, int e) {
  return RatFun::from_parts(num, {{base, e}});
}

}  // namespace

RatFun delta_pole_closed_form(int k, int R, int i, const std::vector<int>& eps) {
  PoleSetup s = pole_setup(k, R, i, eps);
  Poly num = (s.zi - 2L) * (one() - 2L * s.zi) * (one() - s.zi * s.zi) * (one() - s.zi * s.zbi) * delta_on(s.rest);
  for (int j0 : s.rest) {
    Poly zj = s.z(j0 + 1);
    num *= (one() - s.zi * zj) * (one() - s.zi * (one() - zj)) * (zj - s.zi) * (zj + s.zi - one());
  }
  return over_power(num, s.zi, 2 * k - 1);
}

RatFun phi_pole_closed_form(int k, int R, int i, const std::vector<int>& eps) {
  PoleSetup s = pole_setup(k, R, i, eps);
  Poly num = (s.zi - 2L) * (one() - 2L * s.zi) * (one() - s.zi * s.zi) * (one() - s.zi * s.zbi) * phi_on(s.rest);
  for (int j0 : s.rest) {
    Poly zj = s.z(j0 + 1), zbj = one() - zj;
    num *= (one() - s.zi * zj) * (one() - s.zbi * zj) * (one() - s.zi * zbj) * (one() - s.zbi * zbj) *
           (zj - s.zi) * (zj + s.zi - one());
  }
  return over_power(num, s.zi, 3 * k - 3);
}

RatFun magog_tamar_lhs(int k, int R, const std::vector<int>& eps) {
  check_rank(k);
  std::vector<Factor> fs;
  for (int i = 1; i <= k; ++i)
    if (i != R) fs.push_back({one() - z_var(i - 1, eps[static_cast<std::size_t>(i - 1)]) * X(R - 1), 1});
  return RatFun::from_parts(delta(k), fs);
}

RatFun magog_tamar_b(int k, int R, int i, const std::vector<int>& eps) {
  PoleSetup s = pole_setup(k, R, i, eps);
  Poly num = (s.zi - 2L) * (one() - 2L * s.zi) * (one() - s.zi * s.zi) * (one() - s.zi * s.zbi) * delta_on(s.rest);
  for (int j0 : s.rest) {
    Poly zj = s.z(j0 + 1);
    num *= (one() - s.zi * zj) * (one() - s.zi * (one() - zj)) * (zj + s.zi - one());
  }
  return over_power(num, s.zi, k + 1);
}

RatFun gog_tamar_lhs(int k, int R, const std::vector<int>& eps) {
  check_rank(k);
  std::vector<Factor> fs;
  for (int i = 1; i <= k; ++i) {
    if (i == R) continue;
    fs.push_back({gog_tamar_factor(R, i, eps, GogPole::A), 1});
    fs.push_back({gog_tamar_factor(R, i, eps, GogPole::B), 1});
  }
  return RatFun::from_parts(phi(k), fs);
}

Poly gog_tamar_factor(int R, int i, const std::vector<int>& eps, GogPole kind) {
  Poly zi = z_var(i - 1, eps[static_cast<std::size_t>(i - 1)]);
  if (kind == GogPole::A) return one() - zi * X(R - 1);
  if (i < R) return one() - (one() - zi) * X(R - 1);
  return one() - zi * XB(R - 1);
}

RatFun gog_tamar_coefficient(int k, int R, int i, const std::vector<int>& eps, GogPole kind) {
  PoleSetup s = pole_setup(k, R, i, eps);
  const Poly& zi = s.zi;
  const Poly& zbi = s.zbi;
  Poly num;
  Poly base;
  int power = 0;
  if (kind == GogPole::A && i < R) {
    num = (zi - 2L) * (one() - zi * zi) * (one() - zi * zbi) * phi_on(s.rest);
    for (int j0 : s.rest) {
      Poly zj = s.z(j0 + 1), zbj = one() - zj;
      num *= (one() - zi * zj) * (one() - zbi * zj) * (one() - zi * zbj);
    }
    for (int j = R + 1; j <= k; ++j) num *= s.z(j) + zi - one();
    for (int j = 1; j <= R - 1; ++j)
      if (j != i) num *= one() - zbi * s.zb(j);
    base = zi;
    power = k;
  } else if (kind == GogPole::A) {
    num = (one() - 2L * zi) * (one() - zi * zi) * (one() - zi * zbi) * phi_on(s.rest);
    for (int j0 : s.rest) {
      Poly zj = s.z(j0 + 1), zbj = one() - zj;
      num *= (one() - zi * zj) * (one() - zbi * zj) * (one() - zi * zbj);
    }
    for (int j = R + 1; j <= k; ++j)
      if (j != i) num *= s.z(j) + zi - one();
    for (int j = 1; j <= R - 1; ++j) num *= one() - zbi * s.zb(j);
    base = zi;
    power = k + 1;
  } else if (i < R) {
    num = (zbi - 2L) * (one() - zbi * zbi) * (one() - zi * zbi) * phi_on(s.rest);
    for (int j0 : s.rest) {
      Poly zj = s.z(j0 + 1), zbj = one() - zj;
      num *= (one() - zi * zj) * (one() - zbi * zj) * (one() - zbi * zbj);
    }
    for (int j = R + 1; j <= k; ++j) num *= s.z(j) - zi;
    for (int j = 1; j <= R - 1; ++j)
      if (j != i) num *= one() - zi * s.zb(j);
    base = zbi;
    power = k;
  } else {
    num = (one() - 2L * zi) * (one() - zi * zi) * (one() - zi * zbi) * phi_on(s.rest);
    for (int j0 : s.rest) {
      Poly zj = s.z(j0 + 1), zbj = one() - zj;
      num *= (one() - zi * zj) * (one() - zi * zbj) * (zi + zj - one());
    }
    for (int j = R + 1; j <= k; ++j)
      if (j != i) num *= one() - zbi * s.z(j);
    for (int j = 1; j <= R - 1; ++j) num *= zi - s.z(j);
    base = zi;
    power = k + 1;
  }
  return over_power(num, base, power);
}

}  // namespace asmkit
