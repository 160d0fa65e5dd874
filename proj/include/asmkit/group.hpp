#pragma once

#include <string>
#include <vector>

#include "asmkit/polynomial.hpp"
#include "asmkit/rational_function.hpp"

namespace asmkit {

/// @brief Element (pi, eps) of the hyperoctahedral group W(B_k).
///
/// pi holds one-based images (pi[i-1] = pi(i)); eps holds signs +1/-1.
/// It acts by x_i -> x_{pi(i)} first and then x_i -> 1 - x_i where eps_i = -1.
struct SignedPermutation {
  std::vector<int> pi;
  std::vector<int> eps;

  static SignedPermutation identity(int k);
  int k() const { return static_cast<int>(pi.size()); }
  bool is_valid() const;
  /// @brief "[2,3,1|+,-,-]".
  std::string to_string() const;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

enum class Group { Symmetric, Hyperoctahedral };

int permutation_sign(const std::vector<int>& pi);
/// @brief sgn(pi) * (-1)^(number of -1 entries of eps).
int sgn(const SignedPermutation& g);
/// @brief The product with (g*h) f = g(h f).
SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);
SignedPermutation inverse(const SignedPermutation& g);

/// @brief Permutations in lexicographic order; for W(B_k) each is crossed with
/// sign vectors in binary counting order (bit i set means eps_{i+1} = -1).
std::vector<SignedPermutation> group_elements(Group group, int k);

RationalFunction act(const SignedPermutation& g, const RationalFunction& f);
/// @brief Polynomial action; flipped variables must carry nonnegative exponents.
LaurentPolynomial act(const SignedPermutation& g, const LaurentPolynomial& p);

/// @brief Sum of sgn(g) g f over the group.
LaurentPolynomial antisymmetrize(const LaurentPolynomial& p, Group group, int k);
RationalFunction antisymmetrize(const RationalFunction& f, Group group, int k);

/// @brief Checks g f = sgn(g) f on generators: adjacent transpositions, plus x1 -> 1 - x1 for W(B_k).
bool is_antisymmetric(const RationalFunction& f, Group group, int k);

/// @brief Exact divisibility by prod_{i<j} (x_j - x_i).
bool divides_vandermonde(const LaurentPolynomial& p, int k);
/// @brief Exact divisibility by Delta_k.
bool divides_delta(const LaurentPolynomial& p, int k);

}  // namespace asmkit
