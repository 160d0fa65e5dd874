#include "asmkit/recurrence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "asmkit/combinatorics.hpp"
#include "asmkit/errors.hpp"

namespace asmkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

Rational to_rational(const Integer& z) { return Rational(z); }

std::vector<std::vector<int>> by_weight(std::vector<std::vector<int>> pts) {
  std::stable_sort(pts.begin(), pts.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
    int sx = std::accumulate(x.begin(), x.end(), 0), sy = std::accumulate(y.begin(), y.end(), 0);
    return sx != sy ? sx < sy : x < y;
  });
  return pts;
}

/// Solves op F(n; a) = rhs for F(n; a), op having constant term 1.
Integer solve_leading(const ShiftOperator& op, const DiscreteTable& t, int n, const std::vector<int>& a,
                      const Integer& rhs) {
  Rational acc = rhs;
  std::vector<int> b(a.size());
  for (const auto& [m, c] : op.terms()) {
    if (m.is_one()) {
      if (c != 1) throw std::logic_error("operator without unit constant term");
      continue;
    }
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = a[i] + m.e[i];
    acc -= c * to_rational(t.at(n, b));
  }
  if (acc.get_den() != 1) throw std::logic_error("non-integral tabulated value");
  return acc.get_num();
}

}  // namespace

ShiftOperator shift(int i, int power) { return LaurentPolynomial::monomial(Monomial::var(i - 1, power)); }

ShiftOperator backward_difference(int i) { return ShiftOperator(1L) - shift(i, -1); }

ShiftOperator inverse_shift(const LaurentPolynomial& p) {
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m.pow(-1), c);
  return LaurentPolynomial::from_terms(std::move(terms));
}

std::string format_point(int n, const std::vector<int>& a) {
  std::string s = std::to_string(n) + ";";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

bool DiscreteTable::contains(int n, const std::vector<int>& a) const { return values_.count({n, a}) > 0; }

const Integer& DiscreteTable::at(int n, const std::vector<int>& a) const {
  auto it = values_.find({n, a});
  if (it == values_.end()) throw DomainError("table has no value at (" + format_point(n, a) + ")");
  return it->second;
}

void DiscreteTable::set(int n, const std::vector<int>& a, const Integer& v) { values_[{n, a}] = v; }

LatticeFunction DiscreteTable::as_function() const {
  return [this](int n, const std::vector<int>& a) { return Rational(at(n, a)); };
}

std::string DiscreteTable::dump() const {
  std::string s;
  for (const auto& [key, v] : values_) s += format_point(key.first, key.second) + "=" + v.get_str() + "\n";
  return s;
}

Rational apply_operator(const ShiftOperator& op, const LatticeFunction& f, int n, const std::vector<int>& a) {
  Rational total = 0;
  std::vector<int> b(a.size());
  for (const auto& [m, c] : op.terms()) {
    for (int v = static_cast<int>(a.size()); v < kMaxVars; ++v)
      if (m.e[v] != 0) throw DomainError("operator shifts a coordinate beyond the point's dimension");
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = a[i] + m.e[i];
    total += c * f(n, b);
  }
  return total;
}

Rational apply_operator(const ShiftOperator& op, const DiscreteTable& t, int n, const std::vector<int>& a) {
  return apply_operator(op, t.as_function(), n, a);
}

ShiftOperator p_a_operator(const std::vector<int>& a) {
  ShiftOperator p(1L);
  int k = static_cast<int>(a.size());
  for (int i = 1; i <= k; ++i) {
    int next = i < k ? a[idx(i)] : 0;
    if (a[idx(i - 1)] < next) throw DomainError("p_a_operator needs a non-increasing vector");
    if (a[idx(i - 1)] > next) p *= backward_difference(i);
  }
  return p;
}

ShiftOperator full_difference(int k) {
  ShiftOperator p(1L);
  for (int i = 1; i <= k; ++i) p *= backward_difference(i);
  return p;
}

std::vector<int> gog_clamp(const std::vector<int>& a) {
  std::vector<int> b = a;
  for (std::size_t i = 1; i < a.size(); ++i) b[i] = std::min(a[i - 1] - 1, a[i]);
  return b;
}

// ---------------------------------------------------------------------------
// Tabulation

DiscreteTable tabulate_X(int k, int n_max) {
  if (k < 1) throw UsageError("tabulation needs k >= 1");
  DiscreteTable t(DiscreteTable::Domain::BarLandOfMagog, k);
  DiscreteTable lower(DiscreteTable::Domain::BarLandOfMagog, k - 1);
  if (k > 1) lower = tabulate_X(k - 1, k);
  ShiftOperator op = full_difference(k);
  for (int n = k; n <= n_max; ++n) {
    for (const auto& a : by_weight(bar_land_of_magog_points(k, n))) {
      bool boundary = a[idx(k - 1)] == 0 || a[0] == n + 1;
      for (int i = 0; i + 1 < k; ++i) boundary = boundary || a[idx(i)] - a[idx(i + 1)] == -1;
      Integer v = 0;
      if (boundary) {
        v = 0;
      } else if (n == k) {
        if (k == 1)
          v = a[0] == 1 ? 1 : 0;
        else
          v = a[idx(k - 1)] == 1 ? lower.at(k, std::vector<int>(a.begin(), a.end() - 1)) : Integer(0);
      } else {
        v = solve_leading(op, t, n, a, t.at(n - 1, a));
      }
      t.set(n, a, v);
    }
  }
  return t;
}

DiscreteTable tabulate_Y(int k, int n_max) {
  if (k < 1) throw UsageError("tabulation needs k >= 1");
  DiscreteTable t(DiscreteTable::Domain::BarLandOfGog, k);
  DiscreteTable lower(DiscreteTable::Domain::BarLandOfGog, k - 1);
  if (k > 1) lower = tabulate_Y(k - 1, k);
  for (int n = k; n <= n_max; ++n) {
    for (const auto& a : by_weight(bar_land_of_gog_points(k, n))) {
      bool boundary = a[0] == n + 1;
      for (int i = 1; i <= k; ++i) boundary = boundary || a[idx(i - 1)] == k - i;
      Integer v = 0;
      if (boundary) {
        v = 0;
      } else if (n == k) {
        // inside the region a_1 = k here
        v = k == 1 ? Integer(1) : lower.at(k, std::vector<int>(a.begin() + 1, a.end()));
      } else {
        v = solve_leading(p_a_operator(a), t, n, a, t.at(n - 1, gog_clamp(a)));
      }
      t.set(n, a, v);
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Checks on brute-force tables

bool pde_magog_holds(const LatticeFunction& f, int k, int n, const std::vector<int>& a) {
  return apply_operator(full_difference(k), f, n, a) == f(n - 1, a);
}

bool pde_gog_holds(const LatticeFunction& f, int k, int n, const std::vector<int>& a) {
  (void)k;
  return apply_operator(p_a_operator(a), f, n, a) == f(n - 1, gog_clamp(a));
}

namespace {

Rational brute_b(int n, const std::vector<int>& a) {
  return Rational(border_count_magog(static_cast<int>(a.size()), n, a));
}

Rational brute_tilde_m(int n, const std::vector<int>& a) {
  return Rational(tilde_m(static_cast<int>(a.size()), n, a));
}

}  // namespace

bool check_ekhad(int k, int n, const std::vector<int>& a) {
  Integer total = 0;
  std::vector<int> b(idx(k));
  std::function<void(int)> rec = [&](int i) {
    if (i > k) {
      total += border_count_magog(k, n - 1, b);
      return;
    }
    int lo = i < k ? a[idx(i)] : 0;
    int hi = std::min(a[idx(i - 1)], n - i);
    for (int v = lo; v <= hi; ++v) {
      b[idx(i - 1)] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return total == border_count_magog(k, n, a);
}

bool check_pde_magog(int k, int n, const std::vector<int>& a) { return pde_magog_holds(brute_b, k, n, a); }

bool check_howard(int k, int n, const std::vector<int>& a) {
  Integer total = 0;
  std::vector<int> b(idx(k));
  std::function<void(int)> rec = [&](int i) {
    if (i > k) {
      total += border_count_gog(k, n - 1, b);
      return;
    }
    int hi = a[idx(i - 1)];
    if (i > 1) hi = std::min({hi, a[idx(i - 2)] - 1, b[idx(i - 2)]});
    hi = std::min(hi, n - 1);
    for (int v = k - i + 1; v <= hi; ++v) {
      b[idx(i - 1)] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return total == border_count_gog(k, n, a);
}

bool check_bill(int k, int n, const std::vector<int>& a) {
  return border_count_gog(k, n, a) == tilde_m(k, n, gog_clamp(a));
}

bool check_pde_gog(int k, int n, const std::vector<int>& a) { return pde_gog_holds(brute_tilde_m, k, n, a); }

}  // namespace asmkit
