#pragma once

#include <vector>

#include "asmkit/polynomial.hpp"
#include "asmkit/rational_function.hpp"

namespace asmkit {

/// @brief f = P / (x^gamma * Q) with P a polynomial and Q(0, ..., 0) != 0.
struct AdmissibleDecomposition {
  Monomial gamma;
  LaurentPolynomial P;
  LaurentPolynomial Q;
};

/// @brief Splits f into the admissible form, or throws AdmissibilityError.
AdmissibleDecomposition admissible_decompose(const RationalFunction& f);
bool is_admissible(const RationalFunction& f);

/// @brief Power series in a box 0 <= e_i <= caps_i; products discard terms outside the box.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(const Monomial& caps);
  /// @brief Truncation of a polynomial with nonnegative exponents.
  static TruncatedSeries from_polynomial(const LaurentPolynomial& p, const Monomial& caps);

  const Monomial& caps() const { return caps_; }
  Rational coefficient(const Monomial& m) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  /// @brief Multiplicative inverse; requires a nonzero constant coefficient.
  TruncatedSeries inverse() const;

 private:
  Monomial caps_;
  std::vector<std::size_t> stride_;
  std::vector<Rational> c_;
  std::size_t index(const Monomial& m) const;
  Monomial unindex(std::size_t i) const;
  bool inside(const Monomial& m) const;
};

/// @brief Iterated constant term over the variables in order, via truncated
/// multivariate series. Requires an admissible f using only those variables.
Rational ct_fast(const RationalFunction& f, const std::vector<int>& order);

/// @brief Coefficient of var^c in the Laurent expansion of f at var = 0 over
/// the field of rational functions in the other variables.
RationalFunction coefficient_univariate(const RationalFunction& f, int var, int c);
RationalFunction ct_univariate(const RationalFunction& f, int var);
RationalFunction res_univariate(const RationalFunction& f, int var);

/// @brief Iterated constant term; the last variable of order is extracted first.
Rational ct_iterated(const RationalFunction& f, const std::vector<int>& order);
/// @brief Iterated residue; the last variable of order is extracted first.
Rational res_iterated(const RationalFunction& f, const std::vector<int>& order);
/// @brief Iterated extraction of the coefficient of var^c for every var in order.
RationalFunction coefficient_iterated(const RationalFunction& f, const std::vector<int>& order, int c);

/// @brief ((1 - var/point) f) at var = point, or (var f) at var = 0 for point 0.
/// Throws OrderError when the pole has order greater than one.
RationalFunction pole_coefficient(const RationalFunction& f, int var, const RationalFunction& point);

/// @brief The order [x1, ..., xk] as 0-based indices.
std::vector<int> natural_order(int k);

}  // namespace asmkit
