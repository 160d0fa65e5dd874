#pragma once

#include "asmkit/polynomial.hpp"

namespace asmkit {

/// @brief Removes monomial content and rational content, and fixes the sign so
/// the graded-lex leading coefficient is positive. Zero maps to zero.
LaurentPolynomial normalize_factor(const LaurentPolynomial& p, Rational* scale = nullptr, Monomial* shift = nullptr);

/// @brief GCD in the Laurent ring Q[x1^+-1..x8^+-1], where monomials are units.
///
/// The result has nonnegative exponents, no monomial content, coprime integer
/// coefficients and a positive graded-lex leading coefficient. gcd(0, 0) = 0.
/// Computed with a dense-evaluation modular algorithm (Brown) over 62-bit primes.
LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace asmkit
