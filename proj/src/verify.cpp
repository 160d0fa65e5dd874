#include "asmkit/verify.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "asmkit/combinatorics.hpp"
#include "asmkit/errors.hpp"
#include "asmkit/expansion.hpp"
#include "asmkit/kernels.hpp"
#include "asmkit/recurrence.hpp"
#include "asmkit/text.hpp"
#include "json.hpp"

namespace asmkit {

namespace {

using Points = std::vector<std::vector<int>>;

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

Poly X(int v) { return Poly::var(v); }
Poly XB(int v) { return Poly::bar(v); }
Poly one() { return Poly(1L); }
Poly xpow(int v, int e) { return Poly::monomial(Monomial::var(v, e)); }
RatFun recip(const Poly& p) { return RatFun::fraction(one(), p); }

std::string join(const std::vector<int>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

std::string signs(const std::vector<int>& eps) {
  std::string s;
  for (std::size_t i = 0; i < eps.size(); ++i) s += std::string(i ? "," : "") + (eps[i] > 0 ? "+" : "-");
  return s;
}

std::string clip(std::string s, std::size_t max = 200) {
  if (s.size() > max) s = s.substr(0, max) + "...";
  return s;
}

std::string q(const Rational& r) { return to_string(r); }

struct Outcome {
  CheckStatus status;
  std::string witness;
};

/// Counts sub-assertions and keeps the first failure.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& detail) {
    ++checked_;
    if (ok) return;
    if (failed_++ == 0) failure_ = detail();
  }
  int checked() const { return checked_; }
  bool ok() const { return failed_ == 0; }
  Outcome finish(const std::string& note = "") const {
    if (failed_ > 0) {
      std::string more = failed_ > 1 ? " (+" + std::to_string(failed_ - 1) + " more)" : "";
      return {CheckStatus::Fail, failure_ + more};
    }
    if (checked_ == 0) return {CheckStatus::Skipped, "no applicable instances"};
    std::string base = "assertions=" + std::to_string(checked_);
    return {CheckStatus::Pass, note.empty() ? base : note + " " + base};
  }

 private:
  int checked_ = 0;
  int failed_ = 0;
  std::string failure_;
};

// ---------------------------------------------------------------------------
// Parameter validation

int need(const std::optional<int>& v, const char* name) {
  if (!v) throw UsageError(std::string("missing parameter ") + name);
  return *v;
}

int need_k(const CheckParams& p, int lo = 1, int hi = kMaxVars) {
  int k = need(p.k, "k");
  if (k < lo || k > hi)
    throw UsageError("k must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return k;
}

int need_n(const CheckParams& p, int k) {
  int n = need(p.n, "n");
  if (n < k) throw UsageError("n must satisfy n >= k");
  return n;
}

void need_eps(const CheckParams& p, int k) {
  if (static_cast<int>(p.eps.size()) != k) throw UsageError("eps must have k entries");
  for (int e : p.eps)
    if (e != 1 && e != -1) throw UsageError("eps entries must be +1 or -1");
}

int need_index(const std::optional<int>& v, const char* name, int k) {
  int r = need(v, name);
  if (r < 1 || r > k) throw UsageError(std::string(name) + " must lie in [1, k]");
  return r;
}

// ---------------------------------------------------------------------------
// Shared computations

Rational ct_auto(const RatFun& f, int k) {
  std::vector<int> order = natural_order(k);
  if (is_admissible(f)) return ct_fast(f, order);
  return ct_iterated(f, order);
}

Rational c_value(int k, int n, const std::vector<int>& a) { return ct_auto(magog_border(k, n, a), k); }
Rational h_value(int k, int n, const std::vector<int>& a) { return ct_auto(gog_border(k, n, a), k); }

/// All vectors hi >= a_1 >= ... >= a_m >= lo.
Points nonincreasing(int m, int lo, int hi) {
  Points out;
  std::vector<int> a(idx(m));
  std::function<void(int, int)> rec = [&](int i, int top) {
    if (i == m) {
      out.push_back(a);
      return;
    }
    for (int v = lo; v <= top; ++v) {
      a[idx(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, hi);
  return out;
}

/// All vectors in [lo, hi]^m.
Points box(int m, int lo, int hi) {
  Points out;
  std::vector<int> a(idx(m), lo);
  while (true) {
    out.push_back(a);
    int i = m - 1;
    while (i >= 0 && a[idx(i)] == hi) a[idx(i--)] = lo;
    if (i < 0) break;
    ++a[idx(i)];
  }
  return out;
}

std::vector<int> drop_last(const std::vector<int>& a) { return {a.begin(), a.end() - 1}; }
std::vector<int> drop_first(const std::vector<int>& a) { return {a.begin() + 1, a.end()}; }

std::string at(int n, const std::vector<int>& a) { return "(" + format_point(n, a) + ")"; }

Poly phi_for(int k, const VerifyOptions& o) { return o.corrupt_phi ? phi(k) + X(0) : phi(k); }

Poly omega_for(int k, const VerifyOptions& o) {
  if (!o.corrupt_phi) return omega(k);
  return exact_divide(phi(k) + X(0), delta(k));
}

/// Zero-based variables {0..k-1} without the listed ones.
std::vector<int> vars_except(int k, std::initializer_list<int> skip) {
  std::vector<int> v;
  for (int j = 0; j < k; ++j)
    if (std::find(skip.begin(), skip.end(), j) == skip.end()) v.push_back(j);
  return v;
}

// ---------------------------------------------------------------------------
// Residue families of Acts III and IV

enum class Family { Magog, Gog };

RatFun residuand(Family fam, int k, int n) { return fam == Family::Magog ? magog_res(k, n) : gog_res(k, n); }
Integer family_count(Family fam, int k, int n) { return fam == Family::Magog ? count_magog(k, n) : count_gog(k, n); }

/// Exponents of x_R and xb_R in the residuand's denominator.
std::pair<int, int> pole_free_exponents(Family fam, int k, int n, int R) {
  return fam == Family::Magog ? std::pair{n + k - R, n + k + 1} : std::pair{n + 1, n + R + 1};
}

int p_degree_bound(Family fam, int k) { return fam == Family::Magog ? k : 2 * k - 1; }

std::vector<int> pi_order(const SignedPermutation& g) {
  std::vector<int> order;
  for (int p : g.pi) order.push_back(p - 1);
  return order;
}

RatFun apply_signs(const RatFun& f, const std::vector<int>& eps) {
  SignedPermutation g = SignedPermutation::identity(static_cast<int>(eps.size()));
  g.eps = eps;
  return act(g, f);
}

/// R = pi(u) for the smallest u with eps_{pi(u)} = -1; 0 when eps has no -1.
int first_flipped(const SignedPermutation& g) {
  for (int p : g.pi)
    if (g.eps[idx(p - 1)] < 0) return p;
  return 0;
}

std::vector<SignedPermutation> residue_elements(int k) {
  if (k == 3) return fixed_wb3_elements();
  return group_elements(Group::Hyperoctahedral, k);
}

struct PolePart {
  GogPole kind;
  int i;  // one-based
  Poly factor;
  RatFun coefficient;  // the tilde coefficient, over the x_R, xb_R powers
  RatFun part;
};

/// The partial-fraction split of the residuand with signs eps and x_R unflipped.
struct Celia {
  std::vector<int> eps;
  RatFun h;
  RatFun remainder;  // the tilde P_R
  RatFun p_part;
  std::vector<PolePart> poles;
};

Celia celia(Family fam, int k, int n, std::vector<int> eps, int R) {
  int r = R - 1;
  eps[idx(r)] = 1;
  auto [alpha, beta] = pole_free_exponents(fam, k, n, R);
  RatFun dr(xpow(r, alpha) * XB(r).pow(beta));
  Celia c;
  c.eps = eps;
  c.h = apply_signs(residuand(fam, k, n), eps);
  RatFun g = (c.h * dr).cancel_exact();
  RatFun rem = g;
  std::vector<GogPole> kinds{GogPole::A};
  if (fam == Family::Gog) kinds.push_back(GogPole::B);
  for (int i = 1; i <= k; ++i) {
    if (i == R) continue;
    for (GogPole kind : kinds) {
      Poly L = gog_tamar_factor(R, i, eps, kind);
      Poly c0 = L.coefficient(r, 0), c1 = L.coefficient(r, 1);
      RatFun coef = RatFun(c0) * pole_coefficient(g, r, RatFun(-c0) / RatFun(c1));
      RatFun term = coef / RatFun(L);
      rem -= term;
      c.poles.push_back({kind, i, L, coef / dr, term / dr});
    }
  }
  c.remainder = rem.gcd_reduce();
  c.p_part = c.remainder / dr;
  return c;
}

/// Exponents of z_i and zb_i in the stated denominator of a tilde coefficient.
std::pair<int, int> tilde_exponents(Family fam, int k, int n, int R, const PolePart& p) {
  int i = p.i;
  if (fam == Family::Magog) return {n + 2 * k - i + 1, n + k + 1};
  if (p.kind == GogPole::A) return i < R ? std::pair{n + k + 1, n + i + 1} : std::pair{n + k + 2, n + i + 1};
  return i < R ? std::pair{n + 1, n + i + k + 1} : std::pair{n + k + 2, n + i + 1};
}

std::string pole_name(const PolePart& p) {
  return std::string(p.kind == GogPole::A ? "A" : "B") + std::to_string(p.i);
}

void expect_hadas(Tally& t, const RatFun& h, int R, const SignedPermutation& g, const std::string& what) {
  std::vector<int> order = pi_order(g);
  Rational lhs = res_iterated(h, order);
  Rational rhs = res_iterated(h.flip(R - 1), order);
  t.expect(lhs == rhs, [&] {
    return what + " g=" + g.to_string() + " R=" + std::to_string(R) + ": " + q(lhs) + " vs " + q(rhs);
  });
}

// ---------------------------------------------------------------------------
// Act I and Act II

Outcome s1(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  Integer b = count_magog(k, n), m = count_gog(k, n);
  std::string w = "b=" + b.get_str() + " m=" + m.get_str();
  return {b == m ? CheckStatus::Pass : CheckStatus::Fail, w};
}

Outcome ct_total(const CheckParams& p, RatFun (*integrand)(int, int), Integer (*brute)(int, int),
                 const char* name) {
  int k = need_k(p);
  int n = need_n(p, k);
  Rational ct = ct_auto(integrand(k, n), k);
  Integer b = brute(k, n);
  std::string w = std::string("ct=") + q(ct) + " " + name + "=" + b.get_str();
  return {ct == b ? CheckStatus::Pass : CheckStatus::Fail, w};
}

Outcome s11(const CheckParams& p, const VerifyOptions&) { return ct_total(p, magog_total, count_magog, "b"); }
Outcome s112(const CheckParams& p, const VerifyOptions&) { return ct_total(p, george, count_magog, "b"); }
Outcome s12(const CheckParams& p, const VerifyOptions&) { return ct_total(p, gog_total, count_gog, "m"); }

Outcome s111(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  Tally t;
  for (const auto& a : bar_land_of_magog_points(k, n)) {
    Rational c = c_value(k, n, a);
    Integer b = border_count_magog(k, n, a);
    t.expect(c == b, [&] { return "C" + at(n, a) + "=" + q(c) + " B=" + b.get_str(); });
  }
  return t.finish();
}

/// Boundary conditions shared by B_k and C_k on the extended Magog region at this n.
void magog_boundary(Tally& t, int k, int n, const std::function<Rational(int, int, const std::vector<int>&)>& F,
                    const char* name) {
  for (const auto& a : bar_land_of_magog_points(k, n)) {
    Rational v = F(k, n, a);
    auto w = [&](const std::string& rule) { return rule + " " + name + at(n, a) + "=" + q(v); };
    for (int i = 0; i + 1 < k; ++i)
      if (a[idx(i)] - a[idx(i + 1)] == -1) t.expect(v == 0, [&] { return w("1_" + std::to_string(i + 1)); });
    if (a[idx(k - 1)] == 0) t.expect(v == 0, [&] { return w("1_k"); });
    if (a[0] == n + 1) t.expect(v == 0, [&] { return w("2"); });
    if (n == k && k >= 2) {
      Rational lower = a[idx(k - 1)] == 1 ? F(k - 1, k, drop_last(a)) : Rational(0);
      t.expect(v == lower, [&] { return w("3") + " expected " + q(lower); });
    }
    if (k == 1 && n == 1) t.expect(v == (a[0] == 1 ? 1 : 0), [&] { return w("4"); });
  }
}

Outcome s1111all(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  Tally t;
  magog_boundary(
      t, k, n, [](int kk, int nn, const std::vector<int>& a) { return Rational(border_count_magog(kk, nn, a)); },
      "B");
  if (n > k) {
    for (const auto& a : land_of_magog_points(k, n))
      t.expect(check_ekhad(k, n, a), [&] { return "Ekhad fails at " + at(n, a); });
    for (const auto& a : nonincreasing(k, 1, n))
      t.expect(check_pde_magog(k, n, a), [&] { return "PDE(B) fails at " + at(n, a); });
  }
  return t.finish();
}

Outcome s1112(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  Tally t;
  magog_boundary(t, k, n, c_value, "C");
  if (n > k) {
    LatticeFunction C = [k](int nn, const std::vector<int>& a) { return c_value(k, nn, a); };
    for (const auto& a : nonincreasing(k, 1, n))
      t.expect(pde_magog_holds(C, k, n, a), [&] { return "PDE(C) fails at " + at(n, a); });
  }
  return t.finish();
}

std::vector<int> need_efes_border(const CheckParams& p, int k) {
  if (static_cast<int>(p.a.size()) != k) throw UsageError("a must have k entries");
  for (int i = 0; i < k; ++i) {
    int hi = i == 0 ? k : p.a[idx(i - 1)];
    if (p.a[idx(i)] > hi || p.a[idx(i)] < 2) throw UsageError("a must satisfy k >= a_1 >= ... >= a_k >= 2");
  }
  return p.a;
}

Outcome s11121(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p, 2);
  std::vector<int> a = need_efes_border(p, k);
  RatFun F = efes_residuand(k, a);
  std::vector<int> order = natural_order(k);
  Rational base = res_iterated(F, order);
  Tally t;
  for (const auto& g : group_elements(Group::Hyperoctahedral, k)) {
    Rational v = res_iterated(act(g, F), order);
    t.expect(v == base, [&] { return "g=" + g.to_string() + ": " + q(v) + " vs " + q(base); });
  }
  return t.finish("res=" + q(base));
}

Outcome s11122(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p, 2);
  std::vector<int> a = need_efes_border(p, k);
  RatFun F = efes_residuand(k, a);
  RatFun sum;
  for (const auto& g : group_elements(Group::Hyperoctahedral, k)) sum += act(g, F);
  Tally t;
  t.expect(sum.is_zero() || sum == RatFun(), [&] { return "orbit sum " + clip(to_string(sum)); });
  return t.finish();
}

Outcome s1113(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  DiscreteTable x = tabulate_X(k, n);
  Tally t;
  for (const auto& a : bar_land_of_magog_points(k, n)) {
    Integer v = x.at(n, a);
    Integer b = border_count_magog(k, n, a);
    Rational c = c_value(k, n, a);
    t.expect(v == b && c == v,
             [&] { return "X" + at(n, a) + "=" + v.get_str() + " B=" + b.get_str() + " C=" + q(c); });
  }
  return t.finish();
}

Outcome s113(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  RatFun diff = issai_lhs(k) - issai_rhs(k);
  Tally t;
  t.expect(diff.is_zero() || diff == RatFun(), [&] { return "difference " + clip(to_string(diff.gcd_reduce())); });
  return t.finish();
}

Outcome s121(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  Tally t;
  for (const auto& a : bar_land_of_gog_points(k, n)) {
    Rational h = h_value(k, n, a);
    Integer m = tilde_m(k, n, a);
    t.expect(h == m, [&] { return "H" + at(n, a) + "=" + q(h) + " tildeM=" + m.get_str(); });
  }
  return t.finish();
}

/// Boundary conditions shared by tilde-M and H_k on the extended Gog region at this n.
void gog_boundary(Tally& t, int k, int n, const std::function<Rational(int, int, const std::vector<int>&)>& F,
                  const char* name) {
  for (const auto& a : bar_land_of_gog_points(k, n)) {
    Rational v = F(k, n, a);
    auto w = [&](const std::string& rule) { return rule + " " + name + at(n, a) + "=" + q(v); };
    for (int i = 1; i <= k; ++i)
      if (a[idx(i - 1)] == k - i) t.expect(v == 0, [&] { return w("1_" + std::to_string(i)); });
    if (a[0] == n + 1) t.expect(v == 0, [&] { return w("2"); });
    if (n == k && a[0] == k && k >= 2) {
      Rational lower = F(k - 1, k, drop_first(a));
      t.expect(v == lower, [&] { return w("3") + " expected " + q(lower); });
    }
    if (k == 1 && n == 1 && a[0] == 1) t.expect(v == 1, [&] { return w("4"); });
  }
}

Outcome s1211all(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  Tally t;
  gog_boundary(
      t, k, n, [](int kk, int nn, const std::vector<int>& a) { return Rational(tilde_m(kk, nn, a)); }, "tildeM");
  if (n > k) {
    for (const auto& a : land_of_gog_points(k, n)) {
      t.expect(check_howard(k, n, a), [&] { return "Howard fails at " + at(n, a); });
      t.expect(check_bill(k, n, a), [&] { return "Bill fails at " + at(n, a); });
      t.expect(check_pde_gog(k, n, a), [&] { return "PDE(tildeM) fails at " + at(n, a); });
    }
  }
  return t.finish();
}

Outcome s12121all(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  Tally t;
  if (n > k) {
    LatticeFunction H = [k](int nn, const std::vector<int>& a) { return h_value(k, nn, a); };
    for (const auto& a : land_of_gog_points(k, n)) {
      t.expect(pde_gog_holds(H, k, n, a), [&] { return "PDE(H) fails at " + at(n, a); });
      Rational d = ct_auto(dave(k, n, a), k);
      t.expect(d == 0, [&] { return "Dave" + at(n, a) + "=" + q(d); });
    }
  }
  return t.finish();
}

Outcome s12122(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  Tally t;
  for (const auto& a : bar_land_of_gog_points(k, n))
    for (int i = 1; i <= k; ++i)
      if (a[idx(i - 1)] == k - i) {
        Rational v = h_value(k, n, a);
        t.expect(v == 0, [&] { return "H" + at(n, a) + "=" + q(v) + " with a_" + std::to_string(i) + "=k-i"; });
      }
  return t.finish();
}

Outcome s12123(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  Tally t;
  for (const auto& a : bar_land_of_gog_points(k, n))
    if (a[0] == n + 1) {
      Rational v = h_value(k, n, a);
      t.expect(v == 0, [&] { return "H" + at(n, a) + "=" + q(v); });
    }
  // the generalized statement: every tail with entries in [0, n]
  if (k >= 2)
    for (const auto& tail : box(k - 1, 0, n)) {
      Rational v = ct_auto(h2b(k, n, tail), k);
      t.expect(v == 0, [&] { return "F_k(" + std::to_string(n) + ";" + join(tail) + ")=" + q(v); });
    }
  return t.finish();
}

Outcome s12124(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p, 2);
  Tally t;
  for (const auto& a : bar_land_of_gog_points(k, k))
    if (a[0] == k) {
      Rational v = h_value(k, k, a), w = h_value(k - 1, k, drop_first(a));
      t.expect(v == w, [&] { return "H" + at(k, a) + "=" + q(v) + " lower=" + q(w); });
    }
  return t.finish();
}

Outcome s1213(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  int n = need_n(p, k);
  DiscreteTable y = tabulate_Y(k, n);
  Tally t;
  for (const auto& a : bar_land_of_gog_points(k, n)) {
    Integer v = y.at(n, a);
    Integer m = tilde_m(k, n, a);
    Rational h = h_value(k, n, a);
    t.expect(v == m && h == v,
             [&] { return "Y" + at(n, a) + "=" + v.get_str() + " tildeM=" + m.get_str() + " H=" + q(h); });
  }
  return t.finish();
}

// ---------------------------------------------------------------------------
// Acts III and IV

Outcome invariance(Family fam, const CheckParams& p) {
  int k = need_k(p);
  int n = need_n(p, k);
  RatFun f = residuand(fam, k, n);
  Integer total = family_count(fam, k, n);
  std::vector<int> order = natural_order(k);
  Tally t;
  for (const auto& g : group_elements(Group::Hyperoctahedral, k)) {
    Rational v = res_iterated(act(g, f), order);
    t.expect(v == total, [&] { return "g=" + g.to_string() + ": res=" + q(v) + " count=" + total.get_str(); });
  }
  return t.finish("count=" + total.get_str());
}

Outcome single_flip(Family fam, const CheckParams& p) {
  int k = need_k(p);
  int n = need_n(p, k);
  RatFun f = residuand(fam, k, n);
  Tally t;
  for (const auto& g : group_elements(Group::Hyperoctahedral, k)) {
    int R = first_flipped(g);
    if (R == 0) continue;
    std::vector<int> eps = g.eps;
    eps[idx(R - 1)] = 1;
    expect_hadas(t, apply_signs(f, eps), R, g, "flip");
  }
  return t.finish();
}

Outcome tamar(Family fam, const CheckParams& p) {
  int k = need_k(p, 2);
  int R = need_index(p.R, "R", k);
  int r = R - 1;
  int bound = p_degree_bound(fam, k);
  Tally t;
  std::string sign_log;
  for (const auto& e : box(k, 0, 1)) {
    if (e[idx(r)] == 1) continue;
    std::vector<int> eps(idx(k));
    for (int j = 0; j < k; ++j) eps[idx(j)] = e[idx(j)] ? -1 : 1;
    RatFun lhs = fam == Family::Magog ? magog_tamar_lhs(k, R, eps) : gog_tamar_lhs(k, R, eps);
    RatFun rem = lhs;
    std::vector<GogPole> kinds{GogPole::A};
    if (fam == Family::Gog) kinds.push_back(GogPole::B);
    for (int i = 1; i <= k; ++i) {
      if (i == R) continue;
      for (GogPole kind : kinds) {
        Poly L = gog_tamar_factor(R, i, eps, kind);
        Poly c0 = L.coefficient(r, 0), c1 = L.coefficient(r, 1);
        RatFun coef = RatFun(c0) * pole_coefficient(lhs, r, RatFun(-c0) / RatFun(c1));
        rem -= coef / RatFun(L);
        RatFun closed =
            fam == Family::Magog ? magog_tamar_b(k, R, i, eps) : gog_tamar_coefficient(k, R, i, eps, kind);
        bool plus = coef == closed, minus = !plus && coef == -closed;
        sign_log += plus ? '+' : (minus ? '-' : '?');
        t.expect(plus || minus, [&] {
          return std::string(kind == GogPole::A ? "A" : "B") + std::to_string(i) + " eps=" + signs(eps) +
                 " differs from the closed form beyond sign";
        });
      }
    }
    rem = rem.gcd_reduce();
    bool poly = !rem.denominator().uses_var(r);
    int deg = rem.numerator().degree(r);
    bool deg_ok = fam == Family::Magog ? deg == bound : deg <= bound;
    t.expect(poly && deg_ok, [&] {
      return "eps=" + signs(eps) + ": remainder " + (poly ? "has degree " + std::to_string(deg) : "is not polynomial") +
             " in x" + std::to_string(R);
    });
  }
  return t.finish("signs=" + sign_log);
}

Outcome pole_specialization(Family fam, const CheckParams& p) {
  int k = need_k(p, 2);
  int R = need_index(p.R, "R", k);
  int i = need_index(p.i, "i", k);
  if (i == R) throw UsageError("i must differ from R");
  RatFun base(fam == Family::Magog ? delta(k) : phi(k));
  Tally t;
  std::string sign_log;
  for (const auto& e : box(k, 0, 1)) {
    if (e[idx(R - 1)] == 1) continue;
    std::vector<int> eps(idx(k));
    for (int j = 0; j < k; ++j) eps[idx(j)] = e[idx(j)] ? -1 : 1;
    RatFun lhs = base.substitute({{R - 1, recip(z_var(i - 1, eps[idx(i - 1)]))}});
    RatFun closed =
        fam == Family::Magog ? delta_pole_closed_form(k, R, i, eps) : phi_pole_closed_form(k, R, i, eps);
    bool plus = lhs == closed, minus = !plus && lhs == -closed;
    sign_log += plus ? '+' : (minus ? '-' : '?');
    t.expect(plus || minus, [&] { return "eps=" + signs(eps) + ": specialization differs beyond sign"; });
  }
  return t.finish("signs=" + sign_log);
}

Outcome celia_check(Family fam, const CheckParams& p) {
  int k = need_k(p, 2);
  int n = need_n(p, k);
  int R = need_index(p.R, "R", k);
  need_eps(p, k);
  Celia c = celia(fam, k, n, p.eps, R);
  int r = R - 1;
  int bound = p_degree_bound(fam, k);
  Tally t;
  bool poly = !c.remainder.denominator().uses_var(r);
  int deg = c.remainder.numerator().degree(r);
  bool deg_ok = fam == Family::Magog ? deg == bound : deg <= bound;
  t.expect(poly && deg_ok, [&] {
    return std::string("tilde P_R ") + (poly ? "has degree " + std::to_string(deg) : "is not polynomial") +
           " in x" + std::to_string(R);
  });
  RatFun sum = c.p_part;
  for (const auto& pole : c.poles) sum += pole.part;
  t.expect(sum == c.h, [] { return std::string("parts do not sum to the residuand"); });
  auto [alpha, beta] = pole_free_exponents(fam, k, n, R);
  int max_deg = 0;
  for (const auto& pole : c.poles) {
    auto [e1, e2] = tilde_exponents(fam, k, n, R, pole);
    Poly zi = z_var(pole.i - 1, c.eps[idx(pole.i - 1)]);
    RatFun polrat =
        (pole.coefficient * RatFun(xpow(r, alpha) * XB(r).pow(beta) * zi.pow(e1) * (one() - zi).pow(e2)))
            .gcd_reduce();
    bool free_r = !polrat.uses_var(r);
    bool poly_i = !polrat.denominator().uses_var(pole.i - 1);
    int d = polrat.numerator().degree(pole.i - 1);
    max_deg = std::max(max_deg, d);
    t.expect(free_r && poly_i, [&] {
      return "tilde " + pole_name(pole) + (free_r ? " is not polynomial in x" + std::to_string(pole.i)
                                                  : " involves x" + std::to_string(R));
    });
    if (fam == Family::Gog)
      t.expect(d <= 2 * k + 1, [&] { return "tilde " + pole_name(pole) + " has degree " + std::to_string(d); });
  }
  return t.finish("deg P=" + std::to_string(deg) + " max deg POLRAT=" + std::to_string(max_deg));
}

enum class Part { P, A, BLow, BHigh };

Outcome hadas(Family fam, const CheckParams& p, Part part) {
  int k = need_k(p, 2);
  int n = need_n(p, k);
  RatFun f = residuand(fam, k, n);
  Tally t;
  for (const auto& g : residue_elements(k)) {
    int R = first_flipped(g);
    if (R == 0) continue;
    Celia c = celia(fam, k, n, g.eps, R);
    if (part == Part::P) {
      expect_hadas(t, c.p_part, R, g, "tilde P");
      continue;
    }
    for (const auto& pole : c.poles) {
      bool take = (part == Part::A && pole.kind == GogPole::A) ||
                  (part == Part::BLow && pole.kind == GogPole::B && pole.i < R) ||
                  (part == Part::BHigh && pole.kind == GogPole::B && pole.i > R);
      if (take) expect_hadas(t, pole.part, R, g, "tilde " + pole_name(pole));
    }
  }
  return t.finish();
}

// ---------------------------------------------------------------------------
// Act V

Outcome s15(const CheckParams& p, const VerifyOptions& o) {
  int k = need_k(p);
  Poly ph = phi_for(k, o);
  Poly lhs = delta(k) * magog_antisymmetrized(k);
  Poly rhs = ph * ph;
  if (k % 2) rhs = -rhs;
  Poly diff = lhs - rhs;
  Tally t;
  t.expect(diff.is_zero(), [&] {
    return "difference has " + std::to_string(diff.size()) + " terms: " + clip(to_string(diff));
  });
  return t.finish("terms=" + std::to_string(lhs.size()));
}

Outcome s151(const CheckParams& p, const VerifyOptions&) {
  int k = need_k(p);
  RatFun L = l_kernel(k);
  Tally t;
  for (int i = 2; i <= k; ++i) {
    int v = i - 1;
    std::vector<int> rest = vars_except(k, {0, v});
    RatFun La = L.substitute({{0, recip(X(v))}});
    RatFun Lb = L.substitute({{0, recip(XB(v))}});
    RatFun fa(1L), fb(1L);
    for (int j : rest) {
      fa *= RatFun::fraction((one() - XB(v) * X(j)) * (one() - XB(v) * XB(j)), X(v));
      fb *= RatFun::fraction((one() - X(v) * X(j)) * (one() - X(v) * XB(j)), XB(v));
    }
    RatFun lower = l_kernel_on(rest);
    t.expect(La == fa * fa * lower, [&] { return "(a) fails at i=" + std::to_string(i); });
    t.expect(Lb == fb * fb * lower, [&] { return "(b) fails at i=" + std::to_string(i); });
  }
  RatFun Lc = L.substitute({{0, RatFun(0L)}});
  t.expect(Lc == l_kernel_on(vars_except(k, {0})), [] { return std::string("(c) fails"); });
  return t.finish();
}

Outcome s1511(const CheckParams&, const VerifyOptions&) {
  RatFun tv(X(0)), x2(X(1));
  RatFun y = recip(X(1)), yb = RatFun(1L) - y, tb = RatFun(1L) - tv, x2b = RatFun(1L) - x2;
  RatFun lhs = (RatFun(1L) - yb * tv) * (RatFun(1L) - y * tb) * (RatFun(1L) - yb * tb) / (tv + y - RatFun(1L)) *
               (RatFun(1L) - x2b * tv) * (RatFun(1L) - x2 * tb) * (RatFun(1L) - x2b * tb) / (tv + x2 - RatFun(1L));
  RatFun base = (RatFun(1L) - x2b * tb) * (RatFun(1L) - x2b * tv) / x2;
  RatFun diff = lhs - base * base;
  Tally t;
  t.expect(diff.is_zero() || diff == RatFun(), [&] { return "difference " + clip(to_string(diff.gcd_reduce())); });
  return t.finish();
}

Outcome s1512(const CheckParams&, const VerifyOptions&) {
  RatFun x2(X(1));
  RatFun y = recip(X(1)), yb = RatFun(1L) - y, x2b = RatFun(1L) - x2;
  RatFun lhs = y * y / (RatFun(1L) - RatFun(2L) * y) * x2 * x2 / (RatFun(1L) - RatFun(2L) * x2) *
               (RatFun(1L) - yb * x2) * (RatFun(1L) - y * x2b) * (RatFun(1L) - yb * x2b) / (x2 + y - RatFun(1L));
  Tally t;
  t.expect(lhs == RatFun(1L), [&] { return "value " + clip(to_string(lhs.gcd_reduce())); });
  return t.finish();
}

Outcome s152(const CheckParams& p, const VerifyOptions& o) {
  int k = need_k(p);
  RatFun W(omega_for(k, o));
  Tally t;
  for (int i = 2; i <= k; ++i) {
    int v = i - 1;
    std::vector<int> rest = vars_except(k, {0, v});
    RatFun fa(1L), fb(1L);
    for (int j : rest) {
      fa *= RatFun::fraction((one() - XB(v) * X(j)) * (one() - XB(v) * XB(j)), X(v));
      fb *= RatFun::fraction((one() - X(v) * X(j)) * (one() - X(v) * XB(j)), XB(v));
    }
    RatFun lower(omega_on(rest));
    t.expect(W.substitute({{0, recip(X(v))}}) == fa * lower, [&] { return "(a) fails at i=" + std::to_string(i); });
    t.expect(W.substitute({{0, recip(XB(v))}}) == fb * lower, [&] { return "(b) fails at i=" + std::to_string(i); });
  }
  t.expect(W.substitute({{0, RatFun(0L)}}) == RatFun(omega_on(vars_except(k, {0}))),
           [] { return std::string("(c) fails"); });
  if (k >= 2) {
    RatFun lhs = RatFun(xpow(1, k - 2)) * W.substitute({{0, recip(X(1))}});
    Poly rhs = omega_on(vars_except(k, {0, 1}));
    for (int j = 2; j < k; ++j) rhs *= (one() - XB(1) * X(j)) * (one() - XB(1) * XB(j));
    t.expect(lhs == RatFun(rhs), [] { return std::string("Dominique fails"); });
  }
  return t.finish();
}

/// x2^(k-2) Omega_k at x1 = 1/x2.
Poly dominique_lhs(int k, const VerifyOptions& o) {
  return omega_for(k, o).substitute_var(0, xpow(1, -1)) * xpow(1, k - 2);
}

Outcome s1521(const CheckParams& p, const VerifyOptions& o) {
  int k = need_k(p, 2);
  Poly s = omega_for(k, o).substitute_var(0, xpow(1, -1));
  int hi = s.is_zero() ? 0 : s.degree(1), lo = s.is_zero() ? 0 : s.min_degree(1);
  Tally t;
  t.expect(hi <= k - 2, [&] { return "degree " + std::to_string(hi) + " > " + std::to_string(k - 2); });
  t.expect(lo >= -(k - 2), [&] { return "low degree " + std::to_string(lo) + " < " + std::to_string(2 - k); });
  return t.finish("degree=" + std::to_string(hi) + " low=" + std::to_string(lo));
}

Outcome s1522(const CheckParams& p, const VerifyOptions& o) {
  int k = need_k(p);
  if (k <= 2) return {CheckStatus::Skipped, "needs k > 2"};
  RatFun lhs(dominique_lhs(k, o));
  Tally t;
  for (int j = 2; j < k; ++j) {
    // xb2 = 1/x_j and xb2 = 1/xb_j
    RatFun at_x = lhs.substitute({{1, RatFun(1L) - recip(X(j))}});
    RatFun at_xb = lhs.substitute({{1, RatFun(1L) - recip(XB(j))}});
    t.expect(at_x.is_zero(), [&] { return "nonzero at xb2 = 1/x" + std::to_string(j + 1); });
    t.expect(at_xb.is_zero(), [&] { return "nonzero at xb2 = 1/xb" + std::to_string(j + 1); });
  }
  return t.finish();
}

Outcome s15221(const CheckParams&, const VerifyOptions&) {
  Poly prod = (one() - X(0) * XB(1)) * (one() - XB(0) * XB(1)) * (one() - X(0) * XB(2)) * (one() - XB(0) * XB(2)) *
              (one() - X(1) * XB(2)) * (one() - XB(1) * XB(2));
  Tally t;
  for (const auto& g : group_elements(Group::Hyperoctahedral, 3)) {
    RatFun v = RatFun(act(g, prod)).substitute({{2, recip(XB(1))}, {0, recip(X(1))}});
    t.expect(v.is_zero(), [&] { return "nonzero for g=" + g.to_string(); });
  }
  return t.finish();
}

Outcome s1523(const CheckParams& p, const VerifyOptions& o) {
  int k = need_k(p);
  Poly w = omega_for(k, o);
  Poly lower = omega(k - 1);
  Tally t;
  t.expect(w.evaluate_var(k - 1, 0) == lower, [] { return std::string("Walt fails"); });
  t.expect(w.evaluate_var(k - 1, 1) == lower, [] { return std::string("Walt-bar fails"); });
  return t.finish();
}

// ---------------------------------------------------------------------------
// Registry

using Runner = Outcome (*)(const CheckParams&, const VerifyOptions&);
using Grid = std::function<std::vector<CheckParams>(int max_k, int max_n, bool heavy)>;

struct Entry {
  CheckInfo info;
  std::function<Outcome(const CheckParams&, const VerifyOptions&)> run;
  Grid grid;
};

CheckParams kn(int k, int n) {
  CheckParams p;
  p.k = k;
  p.n = n;
  return p;
}

CheckParams only_k(int k) {
  CheckParams p;
  p.k = k;
  return p;
}

// Grid caps: combinatorial checks k <= 3 and n <= 5, kernel identities k <= 4.
constexpr int kComboK = 3;
constexpr int kComboN = 5;
constexpr int kKernelK = 4;

/// (k, n) with k0 <= k <= min(max_k, 3) and k + gap <= n <= min(max_n, 5).
Grid kn_grid(int k0 = 1, int gap = 0) {
  return [k0, gap](int max_k, int max_n, bool) {
    std::vector<CheckParams> out;
    for (int k = k0; k <= std::min(max_k, kComboK); ++k)
      for (int n = k + gap; n <= std::min(max_n, kComboN); ++n) out.push_back(kn(k, n));
    return out;
  };
}

/// k0 <= k <= min(max_k, cap).
Grid k_grid(int k0 = 1, int cap = kKernelK) {
  return [k0, cap](int max_k, int, bool) {
    std::vector<CheckParams> out;
    for (int k = k0; k <= std::min(max_k, cap); ++k) out.push_back(only_k(k));
    return out;
  };
}

Grid single() {
  return [](int, int, bool) { return std::vector<CheckParams>{CheckParams{}}; };
}

Grid efes_grid() {
  return [](int max_k, int, bool) {
    std::vector<CheckParams> out;
    for (int k = 2; k <= std::min(max_k, kComboK); ++k)
      for (const auto& a : nonincreasing(k, 2, k)) {
        CheckParams p = only_k(k);
        p.a = a;
        out.push_back(p);
      }
    return out;
  };
}

/// Sizes of the symbolic residue checks: k <= 2 with n <= 4, plus k = 3 with n <= 4 when heavy.
std::vector<std::pair<int, int>> residue_sizes(int max_k, int max_n, bool heavy, int k0) {
  std::vector<std::pair<int, int>> out;
  for (int k = k0; k <= std::min(max_k, heavy ? 3 : 2); ++k)
    for (int n = std::max(k, 2); n <= std::min(max_n, 4); ++n) out.emplace_back(k, n);
  return out;
}

Grid residue_grid(int k0) {
  return [k0](int max_k, int max_n, bool heavy) {
    std::vector<CheckParams> out;
    for (auto [k, n] : residue_sizes(max_k, max_n, heavy, k0)) out.push_back(kn(k, n));
    return out;
  };
}

/// k in [2, 3] (4 when heavy) and every R, optionally every i != R.
Grid pole_grid(bool with_i) {
  return [with_i](int max_k, int, bool heavy) {
    std::vector<CheckParams> out;
    for (int k = 2; k <= std::min(max_k, heavy ? 4 : 3); ++k)
      for (int R = 1; R <= k; ++R) {
        if (!with_i) {
          CheckParams p = only_k(k);
          p.R = R;
          out.push_back(p);
          continue;
        }
        for (int i = 1; i <= k; ++i)
          if (i != R) {
            CheckParams p = only_k(k);
            p.R = R;
            p.i = i;
            out.push_back(p);
          }
      }
    return out;
  };
}

Grid celia_grid() {
  return [](int max_k, int max_n, bool heavy) {
    std::vector<CheckParams> out;
    for (auto [k, n] : residue_sizes(max_k, max_n, heavy, 2))
      for (int R = 1; R <= k; ++R)
        for (const auto& e : box(k, 0, 1)) {
          if (e[idx(R - 1)] == 1) continue;
          CheckParams p = kn(k, n);
          p.R = R;
          for (int b : e) p.eps.push_back(b ? -1 : 1);
          out.push_back(p);
        }
    return out;
  };
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    using F = Family;
    std::vector<Entry> e;
    auto add = [&](std::string id, std::vector<std::string> params, std::string summary,
                   std::function<Outcome(const CheckParams&, const VerifyOptions&)> run, Grid grid) {
      e.push_back({{std::move(id), std::move(params), std::move(summary)}, std::move(run), std::move(grid)});
    };
    auto fam = [](Outcome (*f)(Family, const CheckParams&), Family which) {
      return [f, which](const CheckParams& p, const VerifyOptions&) { return f(which, p); };
    };
    auto part = [](Family which, Part pt) {
      return [which, pt](const CheckParams& p, const VerifyOptions&) { return hadas(which, p, pt); };
    };
    add("S1", {"k", "n"}, "Magog and Gog trapezoids are equinumerous", s1, kn_grid());
    add("S11", {"k", "n"}, "CT of the Magog total integrand equals the Magog count", s11, kn_grid());
    add("S111", {"k", "n"}, "C_k = B_k on the extended Magog region", s111, kn_grid());
    add("S1111all", {"k", "n"}, "Magog recurrences and boundary conditions on brute tables", s1111all, kn_grid());
    add("S1112", {"k", "n"}, "C_k satisfies the Magog recurrence and boundary conditions", s1112, kn_grid());
    add("S11121", {"k", "a"}, "W(B_k)-invariance of the residue of F_{k;a}", s11121, efes_grid());
    add("S11122", {"k", "a"}, "the W(B_k)-orbit sum of F_{k;a} vanishes", s11122, efes_grid());
    add("S1113", {"k", "n"}, "tabulated X_k agrees with B_k and C_k", s1113, kn_grid());
    add("S112", {"k", "n"}, "the staircase integrand counts Magog trapezoids", s112, kn_grid());
    add("S113", {"k"}, "the Schur antisymmetrization identity", s113, k_grid());
    add("S12", {"k", "n"}, "CT of the Gog total integrand equals the Gog count", s12, kn_grid());
    add("S121", {"k", "n"}, "H_k = tilde M_k on the extended Gog region", s121, kn_grid());
    add("S1211all", {"k", "n"}, "Gog recurrences and boundary conditions on brute tables", s1211all, kn_grid());
    add("S12121all", {"k", "n"}, "H_k satisfies the block recurrence; the defect CT vanishes", s12121all,
        kn_grid(1, 1));
    add("S12122", {"k", "n"}, "H_k vanishes on a_i = k - i", s12122, kn_grid());
    add("S12123", {"k", "n"}, "H_k vanishes on a_1 = n + 1, generalized tails included", s12123, kn_grid());
    add("S12124", {"k"}, "H_k(k; k, a) reduces to H_{k-1}(k; a)", s12124, k_grid(2, kComboK));
    add("S1213", {"k", "n"}, "tabulated Y_k agrees with tilde M_k and H_k", s1213, kn_grid());
    add("S13", {"k", "n"}, "the Magog residue is W(B_k)-invariant", fam(invariance, F::Magog), residue_grid(1));
    add("S131", {"k", "n"}, "the first flipped sign of the Magog residuand may be reset",
        fam(single_flip, F::Magog), residue_grid(1));
    add("S1311", {"k", "R"}, "Magog partial fractions: B_i closed form and polynomial part",
        fam(tamar, F::Magog), pole_grid(false));
    add("S13111", {"k", "R", "i"}, "Delta_k at x_R = 1/z_i", fam(pole_specialization, F::Magog), pole_grid(true));
    add("S1312", {"k", "n", "eps", "R"}, "Magog residuand splits into polynomial and pole parts",
        fam(celia_check, F::Magog), celia_grid());
    add("S1313", {"k", "n"}, "the Magog polynomial part survives the flip", part(F::Magog, Part::P),
        residue_grid(2));
    add("S1314", {"k", "n"}, "each Magog pole part survives the flip", part(F::Magog, Part::A), residue_grid(2));
    add("S14", {"k", "n"}, "the Gog residue is W(B_k)-invariant", fam(invariance, F::Gog), residue_grid(1));
    add("S141", {"k", "n"}, "the first flipped sign of the Gog residuand may be reset", fam(single_flip, F::Gog),
        residue_grid(1));
    add("S1411", {"k", "R"}, "Gog partial fractions: A_i, B_i closed forms and polynomial part",
        fam(tamar, F::Gog), pole_grid(false));
    add("S14111", {"k", "R", "i"}, "Phi_k at x_R = 1/z_i", fam(pole_specialization, F::Gog), pole_grid(true));
    add("S1412", {"k", "n", "eps", "R"}, "Gog residuand splits into polynomial and pole parts",
        fam(celia_check, F::Gog), celia_grid());
    add("S1413", {"k", "n"}, "the Gog polynomial part survives the flip", part(F::Gog, Part::P), residue_grid(2));
    add("S1414", {"k", "n"}, "each Gog A_i part survives the flip", part(F::Gog, Part::A), residue_grid(2));
    add("S1415", {"k", "n"}, "each Gog B_i part with i < R survives the flip", part(F::Gog, Part::BLow),
        residue_grid(2));
    add("S1416", {"k", "n"}, "each Gog B_i part with i > R survives the flip", part(F::Gog, Part::BHigh),
        residue_grid(2));
    add("S15", {"k"}, "Delta_k times the Magog bracket equals (-1)^k Phi_k^2", s15, k_grid());
    add("S151", {"k"}, "specializations of L_k at x1 = 1/x_i, 1/xb_i, 0", s151, k_grid());
    add("S1511", {}, "first auxiliary rational identity for L_k", s1511, single());
    add("S1512", {}, "second auxiliary rational identity for L_k", s1512, single());
    add("S152", {"k"}, "specializations of Omega_k and the reduced identity at x1 = 1/x2", s152, k_grid());
    add("S1521", {"k"}, "degree bounds of Omega_k at x1 = 1/x2", s1521, k_grid(2));
    add("S1522", {"k"}, "vanishing of the reduced left side at 2(k-2) points", s1522, k_grid(3));
    add("S15221", {}, "six-factor product vanishes on the W(B_3) orbit", s15221, single());
    add("S1523", {"k"}, "Omega_k at x_k = 0 and x_k = 1", s1523, k_grid());
    return e;
  }();
  return entries;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.info.id == id) return e;
  throw RegistryError("unknown check id " + id);
}

}  // namespace

std::string CheckParams::to_string() const {
  std::vector<std::string> parts;
  if (k) parts.push_back("k=" + std::to_string(*k));
  if (n) parts.push_back("n=" + std::to_string(*n));
  if (!a.empty()) parts.push_back("a=" + join(a));
  if (R) parts.push_back("R=" + std::to_string(*R));
  if (i) parts.push_back("i=" + std::to_string(*i));
  if (!eps.empty()) parts.push_back("eps=" + signs(eps));
  std::string s;
  for (std::size_t j = 0; j < parts.size(); ++j) s += (j ? " " : "") + parts[j];
  return s;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "skipped";
}

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const CheckInfo& check_info(const std::string& id) { return entry(id).info; }

CheckResult run_check(const std::string& id, const CheckParams& params, const VerifyOptions& options) {
  const Entry& e = entry(id);
  CheckResult r;
  r.id = id;
  r.params = params;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = e.run(params, options);
    r.status = o.status;
    r.witness = o.witness;
  } catch (const UsageError&) {
    throw;
  } catch (const RegistryError&) {
    throw;
  } catch (const std::exception& ex) {
    r.status = CheckStatus::Fail;
    r.witness = std::string("exception: ") + ex.what();
  }
  r.elapsed = std::chrono::steady_clock::now() - t0;
  if (r.status == CheckStatus::Fail && r.witness.empty()) r.witness = "failed";
  return r;
}

std::vector<CheckParams> default_grid(const std::string& id, int max_k, int max_n, bool heavy) {
  if (max_k < 1 || max_n < 1) throw UsageError("bounds must be at least 1");
  return entry(id).grid(max_k, max_n, heavy);
}

bool matches_filter(const std::string& id, const std::string& filter) {
  return filter.empty() || fnmatch(filter.c_str(), id.c_str(), 0) == 0;
}

std::vector<CheckResult> run_all(int max_k, int max_n, const std::string& filter, const VerifyOptions& options) {
  std::vector<std::pair<std::string, CheckParams>> tasks;
  for (const auto& e : registry())
    if (matches_filter(e.info.id, filter))
      for (auto& p : default_grid(e.info.id, max_k, max_n, options.heavy)) tasks.emplace_back(e.info.id, p);
  std::vector<CheckResult> results(tasks.size());
  unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j; (j = next++) < tasks.size();) results[j] = run_check(tasks[j].first, tasks[j].second, options);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return results;
}

std::vector<SignedPermutation> fixed_wb3_elements() {
  return {
      {{1, 2, 3}, {-1, 1, 1}},  {{1, 2, 3}, {1, 1, -1}}, {{2, 3, 1}, {1, -1, -1}},
      {{3, 2, 1}, {-1, -1, -1}}, {{2, 1, 3}, {1, 1, 1}},  {{1, 3, 2}, {-1, 1, -1}},
  };
}

std::string format_human(const std::vector<CheckResult>& results, bool timings) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "ID" << std::setw(30) << "PARAMS" << std::setw(9) << "STATUS";
  if (timings) os << std::right << std::setw(10) << "MS";
  os << "  WITNESS\n";
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : results) {
    os << std::left << std::setw(10) << r.id << std::setw(30) << r.params.to_string() << std::setw(9)
       << to_string(r.status);
    if (timings) os << std::right << std::setw(10) << std::fixed << std::setprecision(1) << r.elapsed.count();
    os << "  " << r.witness << "\n";
    (r.status == CheckStatus::Pass ? pass : r.status == CheckStatus::Fail ? fail : skipped)++;
  }
  os << results.size() << " checks: " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
  return os.str();
}

std::string format_record(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["params"] = r.params.to_string();
  j["status"] = to_string(r.status);
  j["witness"] = r.witness;
  j["elapsed_ms"] = r.elapsed.count();
  return j.dump();
}

}  // namespace asmkit
