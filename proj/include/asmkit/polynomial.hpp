#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace asmkit {

using Rational = mpq_class;
using Integer = mpz_class;

/// @brief Number of variables x1..x8 in the fixed variable universe.
inline constexpr int kMaxVars = 8;

/// @brief Exponent vector over x1..x8; entries may be negative.
struct Monomial {
  std::array<int32_t, kMaxVars> e{};

  static Monomial var(int i, int power = 1);
  int total() const;
  bool is_one() const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial pow(int p) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// @brief Graded-lex order: total degree first, then lex with x1 > x2 > ...
bool glex_less(const Monomial& a, const Monomial& b);
/// @brief Pure lex order with x1 > x2 > ...
bool lex_less(const Monomial& a, const Monomial& b);
Monomial min_monomial(const Monomial& a, const Monomial& b);
Monomial max_monomial(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// @brief Sparse Laurent polynomial in x1..x8 with exact rational coefficients.
///
/// Terms are stored in ascending graded-lex order with no zero coefficients,
/// so structural equality is mathematical equality.
class LaurentPolynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long c);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// @brief The variable x_{i+1} (0-based index).
  static LaurentPolynomial var(int i);
  /// @brief 1 - x_{i+1}.
  static LaurentPolynomial bar(int i);
  static LaurentPolynomial monomial(const Monomial& m, const Rational& c = 1);
  /// @brief Builds from arbitrary terms, merging duplicates and dropping zeros.
  static LaurentPolynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;
  /// @brief Greatest term in graded-lex order; requires nonzero.
  const Term& leading_term() const { return terms_.back(); }
  /// @brief Greatest term in pure lex order; requires nonzero.
  const Term& lex_leading_term() const;

  int degree(int var) const;
  int min_degree(int var) const;
  int total_degree() const;
  Monomial min_exponents() const;
  Monomial max_exponents() const;
  bool uses_var(int var) const;
  /// @brief One more than the largest variable index that occurs.
  int num_vars() const;
  bool has_negative_exponents() const;
  bool is_integral() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  LaurentPolynomial& operator/=(const Rational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, long c) { return a *= Rational(c); }
  friend LaurentPolynomial operator*(long c, LaurentPolynomial a) { return a *= Rational(c); }
  friend LaurentPolynomial operator/(LaurentPolynomial a, const Rational& c) { return a /= c; }
  friend LaurentPolynomial operator/(LaurentPolynomial a, long c) { return a /= Rational(c); }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  /// @brief Multiplies every exponent vector by a monomial.
  LaurentPolynomial shift(const Monomial& m) const;
  /// @brief Integer power; a negative exponent is allowed only for monomials.
  LaurentPolynomial pow(int e) const;
  /// @brief Coefficient of var^j, as a polynomial free of var.
  LaurentPolynomial coefficient(int var, int j) const;
  /// @brief Splits by powers of var: result[j - min_degree(var)] is the coefficient of var^j.
  std::vector<LaurentPolynomial> coefficients(int var) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  /// @brief Sets one variable to a constant.
  LaurentPolynomial evaluate_var(int var, const Rational& value) const;
  /// @brief x_{i+1} -> x_{perm[i]+1} for every i < perm.size().
  LaurentPolynomial permute(const std::vector<int>& perm) const;
  /// @brief x -> 1 - x for one variable; requires nonnegative exponents in that variable.
  LaurentPolynomial flip(int var) const;
  /// @brief Replaces var by a polynomial; negative exponents require a monomial value.
  LaurentPolynomial substitute_var(int var, const LaurentPolynomial& value) const;

  /// @brief Positive rational c such that this/c has coprime integer coefficients.
  Rational content() const;

 private:
  std::vector<Term> terms_;
  friend class PolyBuilder;
};

using Poly = LaurentPolynomial;

/// @brief Accumulates terms in a hash table and emits a normalized polynomial.
class PolyBuilder {
 public:
  explicit PolyBuilder(std::size_t reserve = 0);
  void add(const Monomial& m, const Rational& c);
  void add(const LaurentPolynomial& p);
  void add_scaled(const LaurentPolynomial& p, const Rational& scale);
  LaurentPolynomial build();

 private:
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<LaurentPolynomial::Term> terms_;
};

/// @brief Returns r with p = q*r exactly in the Laurent ring, or throws DivisibilityError.
LaurentPolynomial exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q);
/// @brief Like exact_divide but reports failure through the return flag.
bool try_exact_divide(const LaurentPolynomial& p, const LaurentPolynomial& q, LaurentPolynomial& out);

std::string var_name(int i);

}  // namespace asmkit
