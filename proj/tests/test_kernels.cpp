#include "asmkit/expansion.hpp"
#include "asmkit/group.hpp"
#include "asmkit/kernels.hpp"
#include "doctest.h"

using namespace asmkit;

namespace {
Poly X(int i) { return Poly::var(i - 1); }
Poly XB(int i) { return Poly::bar(i - 1); }
RatFun R(const Poly& p) { return RatFun(p); }
Poly one() { return Poly(1L); }

/// sum_g sgn(g) g[p] term by term.
Poly signed_sum(const Poly& p, Group group, int k) {
  Poly s;
  for (const auto& g : group_elements(group, k)) s += sgn(g) * act(g, p);
  return s;
}

Poly phi_oracle(int k) {
  Poly base(1L);
  for (int i = 1; i <= k; ++i) base *= XB(i).pow(k - i) * X(i).pow(k);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) base *= (1 - X(i) * XB(j)) * (1 - XB(i) * XB(j));
  Poly s = signed_sum(base, Group::Hyperoctahedral, k);
  return k % 2 ? -s : s;
}

std::vector<BlockStructure> all_blocks(int k) {
  std::vector<BlockStructure> out;
  for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
    BlockStructure b;
    for (int j = 1; j < k; ++j)
      if (mask & (1 << (j - 1))) b.r.push_back(j);
    b.r.push_back(k);
    out.push_back(b);
  }
  return out;
}
}  // namespace

TEST_CASE("delta examples") {
  CHECK(delta(0) == one());
  CHECK(delta(1) == 1 - 2 * X(1));
  CHECK(delta(2) == (1 - 2 * X(1)) * (1 - 2 * X(2)) * (X(2) - X(1)) * (X(2) + X(1) - 1));
  CHECK(delta(2).substitute_var(0, X(2)).is_zero());
  CHECK(delta_on({2, 0}) == delta(2).permute({2, 0}));
}

TEST_CASE("delta has degree 2k-1 in every variable") {
  for (int k = 1; k <= 4; ++k)
    for (int v = 0; v < k; ++v) CHECK(delta(k).degree(v) == 2 * k - 1);
}

TEST_CASE("phi examples") {
  CHECK(phi(1) == 1 - 2 * X(1));
  for (int k = 0; k <= 3; ++k) CHECK(phi(k) == phi_oracle(k));
  for (int k = 1; k <= 4; ++k) CHECK(is_antisymmetric(R(phi(k)), Group::Hyperoctahedral, k));
  for (int k = 1; k <= 4; ++k)
    for (int v = 0; v < k; ++v) CHECK(phi(k).degree(v) <= 4 * k - 3);
}

TEST_CASE("psi examples") {
  CHECK(psi(1) == 1 - X(1));
  Poly base = X(1) * XB(1).pow(2) * XB(2).pow(2) * (1 - XB(1) * X(2)) * (1 - X(1) * X(2));
  CHECK(psi(2) == signed_sum(base, Group::Symmetric, 2));
  for (int k = 1; k <= 3; ++k) CHECK(is_antisymmetric(R(psi(k)), Group::Symmetric, k));
}

TEST_CASE("omega examples") {
  CHECK(omega(0) == one());
  CHECK(omega(1) == one());
  for (int k = 1; k <= 4; ++k) {
    CHECK(delta(k) * omega(k) == phi(k));
    CHECK(omega(k).evaluate_var(k - 1, 0) == omega(k - 1));
  }
}

TEST_CASE("jamie examples") {
  BlockStructure single{{1}};
  CHECK(jamie(single).is_zero());
  CHECK(jamie(BlockStructure{{2}}) == XB(2) - XB(1) * XB(2) * X(2));
  CHECK(BlockStructure::from_vector({3, 3, 1}).r == std::vector<int>{2, 3});
  for (int k = 1; k <= 4; ++k)
    for (const auto& b : all_blocks(k)) {
      Poly sum;
      for (const auto& t : jamie_decomposition(b)) sum += jamie_term_value(t);
      CHECK(sum == jamie(b));
    }
}

TEST_CASE("telescoping identities over commuting indeterminates") {
  for (int l = 1; l <= 5; ++l) {
    Poly prod(1L), forward, backward;
    for (int j = 1; j <= l; ++j) prod *= X(j);
    for (int j = 1; j <= l; ++j) {
      Poly before(1L), after(1L);
      for (int h = 1; h < j; ++h) before *= X(h);
      for (int h = j + 1; h <= l; ++h) after *= X(h);
      forward += before * (1 - X(j));
      backward += (1 - X(j)) * after;
    }
    CHECK(one() - prod == forward);
    CHECK(one() - prod == backward);
  }
}

TEST_CASE("t_rational examples") {
  CHECK(t_rational(1, 3) == RatFun::fraction(one(), (X(1) * XB(1)).pow(5)));
  RatFun t = t_rational(2, 2);
  CHECK_FALSE((t * R(X(1) + X(2) - X(1) * X(2))).gcd_reduce().denominator().is_zero());
  Poly d = t.gcd_reduce().denominator();
  Poly q;
  CHECK(try_exact_divide(d, X(1) + X(2) - X(1) * X(2), q));
  for (const auto& g : group_elements(Group::Hyperoctahedral, 2)) CHECK(act(g, t) == t);
}

TEST_CASE("integrand examples") {
  CHECK(ct_iterated(magog_total(1, 3), {0}) == 5);
  CHECK(res_iterated(magog_res(1, 3), {0}) == 5);
  std::vector<int> o = natural_order(2);
  Rational avg = gog_avg_scale(2) * res_iterated(gog_avg(2, 2), o);
  CHECK(avg == ct_iterated(gog_total(2, 2), o));
  CHECK(avg == 2);
  CHECK(magog_avg_scale(2) * res_iterated(magog_avg(2, 2), o) == 2);
  CHECK(magog_avg_scale(2) * res_iterated(magog_avg(2, 3), o) == 7);
  CHECK(gog_avg_scale(2) * res_iterated(gog_avg(2, 3), o) == 7);
}

TEST_CASE("vandermonde examples") {
  CHECK(vandermonde(2) == X(2) - X(1));
  CHECK(vandermonde(3) == antisymmetrize(X(2) * X(3) * X(3), Group::Symmetric, 3));
  CHECK(vandermonde(3).substitute_var(0, X(2)).is_zero());
  for (int k = 1; k <= 5; ++k) CHECK(vandermonde_expansion(k) == vandermonde(k));
}

TEST_CASE("Schur antisymmetrization identity") {
  for (int k = 1; k <= 4; ++k) CHECK(issai_lhs(k) == issai_rhs(k));
}

TEST_CASE("pole specializations match the closed forms up to sign") {
  int k = 3;
  for (int R0 = 1; R0 <= k; ++R0)
    for (int i = 1; i <= k; ++i) {
      if (i == R0) continue;
      for (int s = -1; s <= 1; s += 2) {
        std::vector<int> eps(3, 1);
        eps[static_cast<std::size_t>(i - 1)] = s;
        RatFun at = R(one()) / R(z_var(i - 1, s));
        RatFun p = R(phi(k)).substitute({{R0 - 1, at}});
        RatFun cp = phi_pole_closed_form(k, R0, i, eps);
        CHECK((p == cp || p == -cp));
        RatFun d = R(delta(k)).substitute({{R0 - 1, at}});
        RatFun cd = delta_pole_closed_form(k, R0, i, eps);
        CHECK((d == cd || d == -cd));
      }
    }
}

TEST_CASE("L_k equals Omega_k squared") {
  for (int k = 1; k <= 3; ++k) CHECK(l_kernel(k) == R(omega(k) * omega(k)));
}
