#include <limits>

#include "asmkit/errors.hpp"
#include "asmkit/gcd.hpp"
#include "asmkit/polynomial.hpp"
#include "asmkit/rational_function.hpp"
#include "asmkit/text.hpp"
#include "doctest.h"
#include "random_gen.hpp"

using namespace asmkit;
using asmkit::testing::Gen;

namespace {
Poly X(int i) { return Poly::var(i - 1); }
RatFun R(const Poly& p) { return RatFun(p); }
}  // namespace

TEST_CASE("poly_arith examples") {
  CHECK((X(1) + (-X(1))).is_zero());
  CHECK((X(2) - X(1)) * (X(2) + X(1) - 1) == X(2) * X(2) - X(1) * X(1) - X(2) + X(1));
  CHECK((1 - 2 * X(1)).pow(2) == 1 - 4 * X(1) + 4 * X(1) * X(1));
  CHECK(X(1).pow(-2) == Poly::monomial(Monomial::var(0, -2)));
  CHECK_THROWS_AS((1 - X(1)).pow(-1), UnsupportedOperation);
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  Gen g(11);
  for (int t = 0; t < 1000; ++t) {
    Poly a = g.laurent(3, 5, -3, 3), b = g.laurent(3, 5, -3, 3), c = g.laurent(3, 5, -3, 3);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE(a - a == Poly());
  }
}

TEST_CASE("dense multiplication agrees with term-by-term multiplication") {
  Gen g(12);
  for (int t = 0; t < 20; ++t) {
    Poly a = g.laurent(3, 120, -2, 6, 1000000, 7), b = g.laurent(3, 120, -1, 5, 1000000, 5);
    Poly expected;
    for (const auto& [m, c] : a.terms()) expected += Poly::monomial(m, c) * b;
    REQUIRE(a * b == expected);
  }
}

TEST_CASE("substitute examples") {
  CHECK(substitute(R(1 - 2 * X(1)), {{0, R(1 - X(1))}}) == R(2 * X(1) - 1));
  CHECK(substitute(R(X(1) + 2 * X(2) + 3 * X(3)), {{0, R(X(2))}, {1, R(X(3))}, {2, R(X(1))}}) ==
        R(X(2) + 2 * X(3) + 3 * X(1)));
  RatFun f = RatFun::fraction(1, 1 - X(1) * X(2));
  CHECK_THROWS_AS(substitute(f, {{0, RatFun::fraction(1, X(2))}}), PoleError);
  // x -> 1/x and x -> constant
  CHECK(substitute(R(X(1) + X(1) * X(1)), {{0, RatFun::fraction(1, X(1))}}) ==
        RatFun::fraction(X(1) + 1, X(1) * X(1)));
  CHECK(substitute(R(X(1) * X(2)), {{0, R(Poly(Rational(1, 2)))}}) == R(X(2) / Rational(2)));
}

TEST_CASE("bar is an involution") {
  Gen g(13);
  for (int t = 0; t < 200; ++t) {
    RatFun f = R(g.laurent(3, 4, -2, 3)) / R(g.unit_series(3, 3, 2));
    for (int v = 0; v < 3; ++v) {
      REQUIRE(bar(bar(f, v), v) == f);
      REQUIRE(substitute(substitute(f, {{v, R(1 - Poly::var(v))}}), {{v, R(1 - Poly::var(v))}}) == f);
    }
  }
}

TEST_CASE("exact_divide examples") {
  Poly q = exact_divide(X(1) * X(1) - X(2) * X(2), X(1) - X(2));
  CHECK(q * (X(1) - X(2)) == X(1) * X(1) - X(2) * X(2));
  CHECK(exact_divide(X(2) - X(1), X(1) * X(2)) == X(1).pow(-1) - X(2).pow(-1));
  CHECK_THROWS_AS(exact_divide(X(1) + X(2), X(1) - X(2)), DivisibilityError);
}

TEST_CASE("polynomial gcd") {
  Gen g(14);
  for (int t = 0; t < 60; ++t) {
    Poly c = g.polynomial(3, 4, 2), a = g.polynomial(3, 4, 3), b = g.polynomial(3, 4, 3);
    if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
    Poly d = poly_gcd(a * c, b * c);
    Poly q;
    REQUIRE(try_exact_divide(a * c, d, q));
    REQUIRE(try_exact_divide(b * c, d, q));
    REQUIRE(try_exact_divide(d, normalize_factor(c), q));
    Poly cof = poly_gcd(exact_divide(a * c, d), exact_divide(b * c, d));
    REQUIRE(cof.is_constant());
  }
  CHECK(poly_gcd(X(1) * X(1) - 1, X(1) * X(1) - 2 * X(1) + 1) == X(1) - 1);
  CHECK(poly_gcd(X(1) * (1 - X(2)), X(1) * X(1)) == Poly(1L));
}

TEST_CASE("gcd_reduce examples and value preservation") {
  RatFun a = RatFun::fraction(X(1) * X(1) - X(2) * X(2), X(1) - X(2)).gcd_reduce();
  CHECK(a.is_laurent());
  CHECK(a.numerator() == X(1) + X(2));
  CHECK(a.denominator() == Poly(1L));
  CHECK(RatFun::fraction(X(1) * X(2), X(1) * X(2)).gcd_reduce().num() == Poly(1L));
  CHECK(RatFun::fraction((1 - 2 * X(1)).pow(2), 1 - 2 * X(1)).gcd_reduce().numerator() == 1 - 2 * X(1));
  Gen g(15);
  for (int t = 0; t < 100; ++t) {
    Poly c = g.polynomial(3, 3, 2), a = g.laurent(3, 3, -1, 2), b = g.polynomial(3, 3, 2);
    if (c.is_zero() || b.is_zero()) continue;
    RatFun f = RatFun::fraction(a * c, b * c);
    RatFun r = f.gcd_reduce();
    REQUIRE(r.numerator() * f.denominator() == f.numerator() * r.denominator());
    REQUIRE(poly_gcd(r.numerator(), r.denominator()).is_constant());
    REQUIRE(sgn(r.denominator().leading_term().second) > 0);
  }
}

TEST_CASE("serialization examples") {
  CHECK(to_string(1 - 2 * X(1)) == "1 - 2*x1");
  CHECK(parse_polynomial("x1^-1 + x2") == X(1).pow(-1) + X(2));
  try {
    parse_polynomial("1 -");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 3);
  }
  CHECK(to_string(Poly()) == "0");
  CHECK(to_string(-X(1) + Rational(3, 2) * X(2).pow(3)) == "-x1 + 3/2*x2^3");
  CHECK(to_string(RatFun::fraction(1, 1 - X(1))) == "(-1)/(-1 + x1)");
  CHECK(parse_rational_function("(1)/((1-x1)*x1^2)") == RatFun::fraction(1, (1 - X(1)) * X(1) * X(1)));
}

TEST_CASE("serialization round trip") {
  Gen g(16);
  const long big = std::numeric_limits<long>::max();
  for (int t = 0; t < 500; ++t) {
    std::vector<Poly::Term> ts;
    int n = static_cast<int>(g.range(0, 6));
    for (int i = 0; i < n; ++i) {
      Monomial m;
      for (int v = 0; v < 4; ++v) m.e[v] = static_cast<int>(g.range(-9, 9));
      Rational c(Integer(std::to_string(g.range(-big, big))), Integer(std::to_string(g.range(1, big))));
      c.canonicalize();
      ts.emplace_back(m, c);
    }
    Poly p = Poly::from_terms(ts);
    REQUIRE(parse_polynomial(to_string(p)) == p);
    RatFun f = RatFun::fraction(p, g.unit_series(3, 3, 2));
    REQUIRE(parse_rational_function(to_string(f)) == f);
  }
}
