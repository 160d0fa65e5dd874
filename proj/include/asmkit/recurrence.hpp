#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "asmkit/polynomial.hpp"

namespace asmkit {

/// @brief Laurent polynomial in shift symbols; variable i stands for A_{i+1},
/// with A_i F(n; a) = F(n; a + e_i).
using ShiftOperator = LaurentPolynomial;

/// @brief A_{i}^power, i one-based.
ShiftOperator shift(int i, int power = 1);
/// @brief I - A_i^-1, i one-based.
ShiftOperator backward_difference(int i);
/// @brief P(A_1^-1, ..., A_k^-1) from a Laurent polynomial P(x_1, ..., x_k).
ShiftOperator inverse_shift(const LaurentPolynomial& p);

/// @brief F(n; a) on some lattice region.
using LatticeFunction = std::function<Rational(int n, const std::vector<int>& a)>;

std::string format_point(int n, const std::vector<int>& a);

/// @brief Exact integer values on a tagged lattice region.
class DiscreteTable {
 public:
  enum class Domain { BarLandOfMagog, BarLandOfGog };

  DiscreteTable(Domain domain, int k) : domain_(domain), k_(k) {}

  Domain domain() const { return domain_; }
  int k() const { return k_; }
  bool contains(int n, const std::vector<int>& a) const;
  /// @brief Throws DomainError naming the point when it is absent.
  const Integer& at(int n, const std::vector<int>& a) const;
  void set(int n, const std::vector<int>& a, const Integer& v);
  std::size_t size() const { return values_.size(); }
  const std::map<std::pair<int, std::vector<int>>, Integer>& values() const { return values_; }
  LatticeFunction as_function() const;
  /// @brief One line per point, "n;a1,...,ak=value", in (n, a) order.
  std::string dump() const;

 private:
  Domain domain_;
  int k_;
  std::map<std::pair<int, std::vector<int>>, Integer> values_;
};

/// @brief Sum over operator terms of coeff * F(n; a + exponents); throws DomainError from F.
Rational apply_operator(const ShiftOperator& op, const LatticeFunction& f, int n, const std::vector<int>& a);
Rational apply_operator(const ShiftOperator& op, const DiscreteTable& t, int n, const std::vector<int>& a);

/// @brief prod over {i : a_i > a_{i+1}} of (I - A_i^-1), with a_{k+1} = 0.
ShiftOperator p_a_operator(const std::vector<int>& a);
/// @brief prod_{i=1}^k (I - A_i^-1).
ShiftOperator full_difference(int k);
/// @brief (a_1, min(a_1 - 1, a_2), ..., min(a_{k-1} - 1, a_k)).
std::vector<int> gog_clamp(const std::vector<int>& a);

/// @brief The Magog partial difference equation with boundary data, on the extended Magog region for n <= n_max.
DiscreteTable tabulate_X(int k, int n_max);
/// @brief The Gog partial difference equation with boundary data, on the extended Gog region for n <= n_max.
DiscreteTable tabulate_Y(int k, int n_max);

/// @brief prod (I - A_i^-1) F(n; a) == F(n-1; a).
bool pde_magog_holds(const LatticeFunction& f, int k, int n, const std::vector<int>& a);
/// @brief P^(a) F(n; a) == F(n-1; gog_clamp(a)).
bool pde_gog_holds(const LatticeFunction& f, int k, int n, const std::vector<int>& a);

/// @brief Row-by-row Magog recurrence on brute tables (n > k, a in Land_Of_Magog).
bool check_ekhad(int k, int n, const std::vector<int>& a);
/// @brief Magog partial difference equation on brute tables (n > k, n >= a_1 >= ... >= a_k >= 1).
bool check_pde_magog(int k, int n, const std::vector<int>& a);
/// @brief Gog diagonal recurrence on brute tables (n > k, a in Land_Of_Gog).
bool check_howard(int k, int n, const std::vector<int>& a);
/// @brief M_k(n; a) == tilde_m(n; gog_clamp(a)) (n > k, a in Land_Of_Gog).
bool check_bill(int k, int n, const std::vector<int>& a);
/// @brief Gog partial difference equation for tilde_m (n > k, a in Land_Of_Gog).
bool check_pde_gog(int k, int n, const std::vector<int>& a);

}  // namespace asmkit
