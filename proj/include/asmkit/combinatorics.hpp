#pragma once

#include <functional>
#include <string>
#include <vector>

#include "asmkit/polynomial.hpp"

namespace asmkit {

/// @brief n x n matrix over {-1, 0, 1}, row-major.
struct Asm {
  int n = 0;
  std::vector<int> e;

  int at(int i, int j) const { return e[static_cast<std::size_t>(i * n + j)]; }
  /// @brief Row and column sums 1 with alternating nonzero entries.
  bool is_valid() const;
  /// @brief n lines of space-separated entries.
  std::string to_string() const;
  friend bool operator==(const Asm&, const Asm&) = default;
};

enum class ArrayKind { GogTriangle, GogTrapezoid, MagogTriangle, MagogTrapezoid };

/// @brief Jagged integer array; rows[i] is row i+1 and entries are one-based values.
///
/// Gog: row i has min(k, n+1-i) entries, i = 1..n.
/// Magog: rows i = 1..k, row i has n-i+1 entries.
struct GelfandArray {
  ArrayKind kind = ArrayKind::GogTriangle;
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> rows;

  bool is_valid() const;
  /// @brief Rows separated by "/", entries by ",".
  std::string to_string() const;
  friend bool operator==(const GelfandArray&, const GelfandArray&) = default;
};

bool operator<(const GelfandArray& a, const GelfandArray& b);

/// @brief Callback receiving each object; enumeration stops early when it returns false.
template <class T>
using Visitor = std::function<bool(const T&)>;

/// @brief ASMs of order n in lexicographic order of their row-major entries.
void for_each_asm(int n, const Visitor<Asm>& visit);
std::vector<Asm> enumerate_asm(int n);
Integer count_asm(int n);

/// @brief Triangle row i lists the columns where the sum of the first n-i+1 ASM rows is 1.
GelfandArray asm_to_monotone(const Asm& a);
Asm monotone_to_asm(const GelfandArray& t);

/// @brief n x k Gog trapezoids (conditions (i)-(v)) in lexicographic row order.
void for_each_gog(int k, int n, const Visitor<GelfandArray>& visit);
std::vector<GelfandArray> enumerate_gog(int k, int n);
Integer count_gog(int k, int n);
/// @brief Distinct first-k-column truncations of all n-Gog triangles, sorted.
std::vector<GelfandArray> enumerate_gog_by_chopping(int k, int n);

/// @brief n x k Magog trapezoids in lexicographic row order.
void for_each_magog(int k, int n, const Visitor<GelfandArray>& visit);
std::vector<GelfandArray> enumerate_magog(int k, int n);
Integer count_magog(int k, int n);

/// @brief B_k(n; a): Magog trapezoids with c_{i,n-i+1} = a_i; 0 off the natural domain.
Integer border_count_magog(int k, int n, const std::vector<int>& a);
/// @brief M_k(n; a): Gog trapezoids with d_{n-k+i,k-i+1} = a_i.
Integer border_count_gog(int k, int n, const std::vector<int>& a);
/// @brief The tilde-M function on the extended Gog region; throws DomainError outside it.
Integer tilde_m(int k, int n, const std::vector<int>& a);

bool in_land_of_magog(int n, const std::vector<int>& a);
bool in_bar_land_of_magog(int n, const std::vector<int>& a);
bool in_land_of_gog(int n, const std::vector<int>& a);
bool in_bar_land_of_gog(int n, const std::vector<int>& a);

/// @brief All points of the regions with the given k and n, lexicographic in a.
std::vector<std::vector<int>> land_of_magog_points(int k, int n);
std::vector<std::vector<int>> bar_land_of_magog_points(int k, int n);
std::vector<std::vector<int>> land_of_gog_points(int k, int n);
std::vector<std::vector<int>> bar_land_of_gog_points(int k, int n);

/// @brief prod_{i=0}^{n-1} (3i+1)! / (n+i)!.
Integer asm_number(int n);

}  // namespace asmkit
