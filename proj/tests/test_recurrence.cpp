#include "asmkit/combinatorics.hpp"
#include "asmkit/errors.hpp"
#include "asmkit/expansion.hpp"
#include "asmkit/recurrence.hpp"
#include "doctest.h"
#include "random_gen.hpp"

using namespace asmkit;
using asmkit::testing::Gen;

namespace {
RatFun monomial_inverse(const std::vector<int>& a) {
  Monomial m;
  for (std::size_t i = 0; i < a.size(); ++i) m.e[i] = -a[i];
  return RatFun(Poly::monomial(m));
}
}  // namespace

TEST_CASE("apply_operator examples") {
  LatticeFunction sq = [](int, const std::vector<int>& a) { return Rational(a[0] * a[0]); };
  CHECK(apply_operator(backward_difference(1), sq, 0, {3}) == 5);
  LatticeFunction f = [](int, const std::vector<int>& a) { return Rational(a[0] * 10 + a[1] * a[1]); };
  Rational expected = f(0, {4, 5}) - f(0, {3, 5}) - f(0, {4, 4}) + f(0, {3, 4});
  CHECK(apply_operator(backward_difference(1) * backward_difference(2), f, 0, {4, 5}) == expected);
  CHECK(apply_operator(ShiftOperator(1L), f, 0, {4, 5}) == f(0, {4, 5}));
  CHECK(apply_operator(shift(2, 2), f, 0, {1, 1}) == f(0, {1, 3}));
}

TEST_CASE("apply_operator outside a table names the point") {
  DiscreteTable t(DiscreteTable::Domain::BarLandOfMagog, 1);
  t.set(2, {1}, 3);
  CHECK(apply_operator(ShiftOperator(1L), t, 2, {1}) == 3);
  try {
    apply_operator(backward_difference(1), t, 2, {1});
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("2;0") != std::string::npos);
  }
}

TEST_CASE("p_a_operator examples") {
  CHECK(p_a_operator({3, 3, 1}) == backward_difference(2) * backward_difference(3));
  CHECK(p_a_operator({1}) == backward_difference(1));
  CHECK(p_a_operator({2, 2}) == backward_difference(2));
  CHECK(full_difference(2) == backward_difference(1) * backward_difference(2));
  CHECK(gog_clamp({4, 4, 1}) == std::vector<int>{4, 3, 1});
  CHECK(inverse_shift(Poly::var(0) * Poly::var(1) * Poly::var(1)) ==
        Poly::monomial(Monomial::var(0, -1)) * Poly::monomial(Monomial::var(1, -2)));
}

TEST_CASE("tabulation examples") {
  DiscreteTable x1 = tabulate_X(1, 3);
  CHECK(x1.at(1, {1}) == 1);
  DiscreteTable x = tabulate_X(2, 4);
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : bar_land_of_magog_points(2, n)) CHECK(x.at(n, a) == border_count_magog(2, n, a));
  DiscreteTable y = tabulate_Y(2, 4);
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : bar_land_of_gog_points(2, n)) CHECK(y.at(n, a) == tilde_m(2, n, a));
  CHECK(x1.dump().substr(0, 6) == "1;0=0\n");
}

TEST_CASE("tabulations agree with brute force for k <= 3") {
  for (int k = 1; k <= 3; ++k) {
    DiscreteTable x = tabulate_X(k, 5), y = tabulate_Y(k, 5);
    for (int n = k; n <= 5; ++n) {
      for (const auto& a : bar_land_of_magog_points(k, n)) REQUIRE(x.at(n, a) == border_count_magog(k, n, a));
      for (const auto& a : bar_land_of_gog_points(k, n)) REQUIRE(y.at(n, a) == tilde_m(k, n, a));
    }
  }
}

TEST_CASE("recurrence check examples") {
  CHECK(check_pde_magog(2, 3, {2, 1}));
  CHECK(check_bill(2, 3, {2, 2}));
  for (int n = 3; n <= 5; ++n) CHECK(check_pde_gog(2, n, {n, n}));
  CHECK(check_ekhad(2, 4, {3, 1}));
  CHECK(check_howard(2, 4, {3, 2}));
}

TEST_CASE("shift operators act as multiplication under the constant term") {
  Gen g(41);
  for (int t = 0; t < 120; ++t) {
    int k = static_cast<int>(g.range(1, 3));
    RatFun f = g.admissible(k);
    Poly P = g.laurent(k, 3, -1, 2);
    std::vector<int> a;
    for (int i = 0; i < k; ++i) a.push_back(static_cast<int>(g.range(0, 2)));
    std::vector<int> order = natural_order(k);
    LatticeFunction F = [&](int, const std::vector<int>& b) { return ct_fast(f * monomial_inverse(b), order); };
    Rational lhs = apply_operator(inverse_shift(P), F, 0, a);
    Rational rhs = ct_fast(RatFun(P) * f * monomial_inverse(a), order);
    REQUIRE(lhs == rhs);
  }
}
