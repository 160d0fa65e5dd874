#pragma once

#include <vector>

#include "asmkit/polynomial.hpp"
#include "asmkit/rational_function.hpp"

namespace asmkit {

/// @brief Maximal blocks of equal components of a non-increasing vector.
///
/// r holds the one-based block ends r_1 < ... < r_l = k.
struct BlockStructure {
  std::vector<int> r;

  /// @brief Blocks of a non-increasing vector a.
  static BlockStructure from_vector(const std::vector<int>& a);
  int k() const { return r.empty() ? 0 : r.back(); }
  bool is_valid() const;
};

/// @brief prod (1 - 2 x_i) prod_{i<j} (x_j - x_i)(x_j + x_i - 1) in x1..xk.
LaurentPolynomial delta(int k);
/// @brief Delta in the listed (0-based) variables, vars[0] playing the role of x1.
LaurentPolynomial delta_on(const std::vector<int>& vars);
/// @brief prod_{i<j} (x_j - x_i).
LaurentPolynomial vandermonde(int k);
/// @brief Sum over S_k of sgn(pi) pi(prod x_i^(i-1)).
LaurentPolynomial vandermonde_expansion(int k);

/// @brief (-1)^k sum_{g in W(B_k)} sgn(g) g[prod xb_i^(k-i) x_i^k prod_{i<j} (1 - x_i xb_j)(1 - xb_i xb_j)].
LaurentPolynomial phi(int k);
LaurentPolynomial phi_on(const std::vector<int>& vars);
/// @brief sum_{pi in S_k} sgn(pi) pi[prod x_i^(k-i) xb_i^k prod_{i<j} (1 - xb_i x_j)(1 - x_i x_j)].
LaurentPolynomial psi(int k);
/// @brief phi(k) / delta(k).
LaurentPolynomial omega(int k);
LaurentPolynomial omega_on(const std::vector<int>& vars);

/// @brief The bracket of the Gog=Magog identity:
/// sum_{g in W(B_k)} sgn(g) g[prod x_i^(i+1) prod_{i<j} (1 - xb_i x_j)(1 - x_i xb_j)(1 - xb_i xb_j)].
LaurentPolynomial magog_antisymmetrized(int k);

/// @brief prod_j xb_{r_j} - prod_i xb_i * prod_j prod_{i=r_{j-1}+2}^{r_j} x_i.
LaurentPolynomial jamie(const BlockStructure& blocks);

/// @brief One summand pol * xb_p * (1 - xb_{p-1} x_p) of the telescoped form; p is one-based.
struct JamieTerm {
  int p;
  LaurentPolynomial pol;
};
/// @brief The explicit double sum, one term per participating p, in increasing p.
std::vector<JamieTerm> jamie_decomposition(const BlockStructure& blocks);
LaurentPolynomial jamie_term_value(const JamieTerm& t);

/// @brief prod 1/(xb_i x_i)^(n+k+1) prod_{i<j} 1/[(1-x_i x_j)(1-xb_i x_j)(1-x_i xb_j)(1-xb_i xb_j)].
RationalFunction t_rational(int k, int n);

// Integrands. Unless noted, the quantity is the iterated constant term over [x1..xk].

/// @brief CT gives b_k(n).
RationalFunction magog_total(int k, int n);
/// @brief C_k(n; a): CT gives B_k(n; a).
RationalFunction magog_border(int k, int n, const std::vector<int>& a);
/// @brief The staircase-denominator form; CT gives b_k(n).
RationalFunction george(int k, int n);
/// @brief f_{n,k}; the iterated residue gives b_k(n).
RationalFunction magog_res(int k, int n);
/// @brief CT gives m_k(n).
RationalFunction gog_total(int k, int n);
/// @brief H_k(n; a): CT gives the tilde-M count.
RationalFunction gog_border(int k, int n, const std::vector<int>& a);
/// @brief F_{n,k}; the iterated residue gives m_k(n).
RationalFunction gog_res(int k, int n);
/// @brief T_{k,n} Delta_k magog_antisymmetrized(k); residue times magog_avg_scale(k) gives b_k(n).
RationalFunction magog_avg(int k, int n);
/// @brief T_{k,n} Phi_k^2; residue times gog_avg_scale(k) gives m_k(n).
RationalFunction gog_avg(int k, int n);
/// @brief 1 / (2^k k!).
Rational magog_avg_scale(int k);
/// @brief (-1)^k / (2^k k!).
Rational gog_avg_scale(int k);

/// @brief F_{k;a} = prod x_i^(k-a_i+i) Delta_k / prod x_i^(2k) xb_i^(2k); its residue is C_k(k; a).
RationalFunction efes_residuand(int k, const std::vector<int>& a);
/// @brief Jamie(a) Phi_k / denominator of H_k(n; a); its CT is the defect of the H_k recurrence.
RationalFunction dave(int k, int n, const std::vector<int>& a);
/// @brief Phi_k / (x1^n xb1^(n+1) prod x_i^(a_i-1) prod_{i>=2} (1-x1 x_i)(1-xb1 x_i)); tail = (a_2..a_k).
RationalFunction h2b(int k, int n, const std::vector<int>& tail);

/// @brief sum_pi sgn(pi) pi[x1 x2^2 ... xk^k / ((1-xk)(1-xk x_{k-1})...(1-xk...x1))].
RationalFunction issai_lhs(int k);
/// @brief x1...xk prod_{i<j} (x_j - x_i) / [prod (1-x_i) prod_{i<j} (1-x_i x_j)].
RationalFunction issai_rhs(int k);

/// @brief L_k in the signed-sum form (-1)^k sum_eps eps[prod x_i^2/(1-2x_i)
/// prod_{i<j} (1-xb_i x_j)(1-x_i xb_j)(1-xb_i xb_j)/(x_j+x_i-1)] on the listed variables.
RationalFunction l_kernel_on(const std::vector<int>& vars);
RationalFunction l_kernel(int k);

/// @brief z = x_v when eps = +1 and 1 - x_v when eps = -1.
LaurentPolynomial z_var(int v, int eps);

/// @brief Closed form for Delta_k at x_R = 1/z_i up to sign; R, i one-based,
/// eps one sign per variable (eps[R-1] ignored).
RationalFunction delta_pole_closed_form(int k, int R, int i, const std::vector<int>& eps);
/// @brief Closed form for Phi_k at x_R = 1/z_i up to sign.
RationalFunction phi_pole_closed_form(int k, int R, int i, const std::vector<int>& eps);

/// @brief Left side of the Magog partial fraction: Delta_k / prod_{i != R} (1 - z_i x_R).
RationalFunction magog_tamar_lhs(int k, int R, const std::vector<int>& eps);
/// @brief Closed form of the Magog coefficient B_i up to sign.
RationalFunction magog_tamar_b(int k, int R, int i, const std::vector<int>& eps);

/// @brief Which pole of the Gog partial fraction: A_i at 1 - z_i x_R, B_i at
/// 1 - zb_i x_R (i < R) or 1 - z_i xb_R (i > R).
enum class GogPole { A, B };
/// @brief Left side of the Gog partial fraction.
RationalFunction gog_tamar_lhs(int k, int R, const std::vector<int>& eps);
/// @brief The linear factor in x_R carrying the pole.
LaurentPolynomial gog_tamar_factor(int R, int i, const std::vector<int>& eps, GogPole kind);
/// @brief Closed form of A_i or B_i up to sign.
RationalFunction gog_tamar_coefficient(int k, int R, int i, const std::vector<int>& eps, GogPole kind);

}  // namespace asmkit
