#pragma once

#include <string>
#include <string_view>

#include "asmkit/polynomial.hpp"
#include "asmkit/rational_function.hpp"

namespace asmkit {

/// @brief "p" or "p/q".
std::string to_string(const Rational& q);
/// @brief Canonical text: ascending graded-lex terms joined by " + " / " - ",
/// e.g. "1 - 2*x1", "x2 + x1^-1*x2^3".
std::string to_string(const LaurentPolynomial& p);
/// @brief "(" numerator ")/(" denominator ")" of the reduced canonical form.
std::string to_string(const RationalFunction& f);

/// @brief Parses an expression over x1..x8 with + - * / ^ and parentheses.
/// Throws ParseError with the byte offset of the first problem.
RationalFunction parse_rational_function(std::string_view text);
/// @brief As parse_rational_function, but the value must be a Laurent polynomial.
LaurentPolynomial parse_polynomial(std::string_view text);

}  // namespace asmkit
