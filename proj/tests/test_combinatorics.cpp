#include <set>

#include "asmkit/combinatorics.hpp"
#include "asmkit/errors.hpp"
#include "doctest.h"

using namespace asmkit;

namespace {
Asm identity_asm(int n) {
  Asm a;
  a.n = n;
  a.e.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) a.e[static_cast<std::size_t>(i * n + i)] = 1;
  return a;
}

/// prod_{i=0}^{n-1} (3i+1)! / (n+i)!
Integer product_formula(int n) {
  auto fact = [](int m) {
    Integer f = 1;
    for (int j = 2; j <= m; ++j) f *= j;
    return f;
  };
  Rational q = 1;
  for (int i = 0; i < n; ++i) {
    Rational f(fact(3 * i + 1), fact(n + i));
    f.canonicalize();
    q *= f;
  }
  return q.get_num();
}
}  // namespace

TEST_CASE("ASM counts") {
  const long expected[] = {1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_asm(n) == expected[n - 1]);
    CHECK(asm_number(n) == expected[n - 1]);
    CHECK(product_formula(n) == expected[n - 1]);
  }
  CHECK(enumerate_asm(1).size() == 1);
  CHECK(enumerate_asm(3).size() == 7);
  for (const auto& a : enumerate_asm(4)) CHECK(a.is_valid());
}

TEST_CASE("ASM enumeration is deterministic and duplicate free") {
  auto first = enumerate_asm(4), second = enumerate_asm(4);
  CHECK(first == second);
  std::set<std::vector<int>> seen;
  for (const auto& a : first) seen.insert(a.e);
  CHECK(seen.size() == first.size());
}

TEST_CASE("identity ASM maps to the staircase triangle") {
  GelfandArray t = asm_to_monotone(identity_asm(3));
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0] == std::vector<int>{1, 2, 3});
  CHECK(t.rows[1] == std::vector<int>{1, 2});
  CHECK(t.rows[2] == std::vector<int>{1});
  CHECK(monotone_to_asm(t) == identity_asm(3));
}

TEST_CASE("bijection round trips") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<std::vector<int>>> images;
    for (const auto& a : enumerate_asm(n)) {
      GelfandArray t = asm_to_monotone(a);
      REQUIRE(t.is_valid());
      REQUIRE(monotone_to_asm(t) == a);
      images.insert(t.rows);
    }
    CHECK(images.size() == enumerate_asm(n).size());
    for (const auto& t : enumerate_gog(n, n)) REQUIRE(asm_to_monotone(monotone_to_asm(t)) == t);
  }
}

TEST_CASE("displayed 5-Gog triangle gives a valid ASM") {
  GelfandArray t;
  t.kind = ArrayKind::GogTriangle;
  t.n = 5;
  t.k = 5;
  t.rows = {{1, 2, 3, 4, 5}, {1, 3, 4, 5}, {2, 4, 5}, {3, 5}, {4}};
  REQUIRE(t.is_valid());
  Asm a = monotone_to_asm(t);
  CHECK(a.is_valid());
  CHECK(asm_to_monotone(a) == t);
}

TEST_CASE("invalid inputs to the bijection") {
  Asm bad = identity_asm(3);
  bad.e[0] = -1;
  CHECK_THROWS_AS(asm_to_monotone(bad), ValidationError);
  GelfandArray t;
  t.kind = ArrayKind::GogTriangle;
  t.n = 2;
  t.k = 2;
  t.rows = {{1, 2}, {3}};
  CHECK_THROWS_AS(monotone_to_asm(t), ValidationError);
}

TEST_CASE("trapezoid counts") {
  CHECK(count_gog(5, 5) == 429);
  CHECK(count_gog(3, 5) == 387);
  CHECK(count_magog(3, 5) == 387);
  CHECK(count_magog(1, 3) == 5);
  CHECK(enumerate_magog(3, 5).size() == 387);
  for (const auto& g : enumerate_magog(2, 4)) CHECK(g.is_valid());
  for (const auto& g : enumerate_gog(2, 4)) CHECK(g.is_valid());
  CHECK(enumerate_gog(2, 3).front().to_string() == "1,2/1,2/1");
}

TEST_CASE("Gog and Magog trapezoids are equinumerous") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) CHECK(count_gog(k, n) == count_magog(k, n));
  for (int n = 1; n <= 6; ++n) CHECK(count_gog(n, n) == asm_number(n));
}

TEST_CASE("both Gog trapezoid definitions give the same objects") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= std::min(n, 3); ++k) {
      auto direct = enumerate_gog(k, n), chopped = enumerate_gog_by_chopping(k, n);
      std::set<GelfandArray> a(direct.begin(), direct.end()), b(chopped.begin(), chopped.end());
      CHECK(a == b);
      CHECK(a.size() == direct.size());
    }
}

TEST_CASE("border count examples") {
  CHECK(border_count_magog(1, 1, {1}) == 1);
  CHECK(border_count_magog(1, 3, {2}) == 2);
  CHECK(border_count_magog(2, 3, {4, 1}) == 0);
  CHECK(border_count_gog(1, 1, {1}) == 1);
  CHECK(tilde_m(1, 1, {1}) == 1);
  CHECK(tilde_m(1, 3, {3}) == 2);
  CHECK_THROWS_AS(tilde_m(2, 3, {5, 1}), DomainError);
}

TEST_CASE("border counts sum to the totals") {
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 5; ++n) {
      Integer b = 0, m = 0;
      for (const auto& a : land_of_magog_points(k, n)) b += border_count_magog(k, n, a);
      for (const auto& a : land_of_gog_points(k, n)) m += border_count_gog(k, n, a);
      CHECK(b == count_magog(k, n));
      CHECK(m == count_gog(k, n));
    }
}

TEST_CASE("tilde M at the top corner counts Gog trapezoids") {
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 4; ++n) CHECK(tilde_m(k, n + 1, std::vector<int>(static_cast<std::size_t>(k), n + 1)) == count_gog(k, n));
}

TEST_CASE("region predicate examples") {
  CHECK(in_land_of_magog(3, {3, 2, 1}));
  CHECK_FALSE(in_land_of_magog(3, {4, 2, 1}));
  CHECK(in_bar_land_of_magog(3, {4, 2, 1}));
  CHECK_FALSE(in_bar_land_of_gog(3, {3, 3, 1}));
  CHECK(in_bar_land_of_gog(3, {3, 2, 1}));
  CHECK(in_bar_land_of_gog(4, {5, 4, 0}));
  CHECK_FALSE(in_bar_land_of_gog(4, {5, 5, 1}));
  for (const auto& a : land_of_gog_points(3, 4)) CHECK(in_land_of_gog(4, a));
  for (const auto& a : bar_land_of_magog_points(2, 3)) CHECK(in_bar_land_of_magog(3, a));
}
