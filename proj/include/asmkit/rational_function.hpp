#pragma once

#include <map>
#include <vector>

#include "asmkit/polynomial.hpp"

namespace asmkit {

/// @brief Quotient of polynomials, stored as a Laurent numerator over a product
/// of powers of normalized polynomial factors.
///
/// Every stored factor has nonnegative exponents, no monomial content, coprime
/// integer coefficients, a positive graded-lex leading coefficient and positive
/// degree. Monomials and scalars always live in the numerator. Equality is
/// decided by cross-multiplication; the representation is not canonical until
/// gcd_reduce is applied.
class RationalFunction {
 public:
  struct Factor {
    LaurentPolynomial poly;
    int exp;
  };

  RationalFunction() = default;
  RationalFunction(const LaurentPolynomial& p);  // NOLINT(google-explicit-constructor)
  RationalFunction(long c);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// @brief num/den; throws PoleError if den is zero.
  static RationalFunction fraction(const LaurentPolynomial& num, const LaurentPolynomial& den);
  /// @brief num / prod factors[i].poly^factors[i].exp with arbitrary (unnormalized) factors.
  static RationalFunction from_parts(const LaurentPolynomial& num, const std::vector<Factor>& factors);

  const LaurentPolynomial& num() const { return num_; }
  const std::vector<Factor>& factors() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// @brief True when the stored denominator is trivial (a Laurent polynomial).
  bool is_laurent() const { return den_.empty(); }

  /// @brief Canonical numerator: a polynomial once monomial content is moved.
  LaurentPolynomial numerator() const;
  /// @brief Canonical denominator: expanded product with positive leading coefficient.
  LaurentPolynomial denominator() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  /// @brief Cross-multiplication equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  /// @brief Simultaneous substitution x_{v+1} -> value for every binding.
  RationalFunction substitute(const std::map<int, RationalFunction>& bindings) const;
  /// @brief x_{i+1} -> x_{perm[i]+1}.
  RationalFunction permute(const std::vector<int>& perm) const;
  /// @brief x -> 1 - x in one variable.
  RationalFunction flip(int var) const;
  /// @brief Value at a rational point; throws PoleError at a pole.
  Rational evaluate(const std::vector<Rational>& point) const;
  bool uses_var(int var) const;
  /// @brief Cancels all common factors of numerator and denominator.
  RationalFunction gcd_reduce() const;
  /// @brief Cancels only stored factors that divide the numerator exactly.
  RationalFunction cancel_exact() const;

 private:
  LaurentPolynomial num_;
  std::vector<Factor> den_;

  void add_factor(const LaurentPolynomial& p, int exp);
  void sort_factors();
};

using RatFun = RationalFunction;

/// @brief Free-function form of RationalFunction::gcd_reduce.
inline RationalFunction gcd_reduce(const RationalFunction& f) { return f.gcd_reduce(); }
/// @brief Free-function form of simultaneous substitution.
RationalFunction substitute(const RationalFunction& f, const std::map<int, RationalFunction>& bindings);
/// @brief x_{v+1} -> 1 - x_{v+1}.
RationalFunction bar(const RationalFunction& f, int var);
/// @brief Total order on normalized factors used for canonical storage.
bool factor_less(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace asmkit
