#include "asmkit/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "asmkit/errors.hpp"

namespace asmkit {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void require_shape(int k, int n) {
  if (k < 1 || n < k) throw UsageError("shape requires n >= k >= 1");
}

int gog_row_len(int k, int n, int i) { return std::min(k, n + 1 - i); }

std::string join_rows(const std::vector<std::vector<int>>& rows) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "/";
    for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows[i][j]);
  }
  return s;
}

bool is_gog(int k, int n, const std::vector<std::vector<int>>& d) {
  if (static_cast<int>(d.size()) != n) return false;
  for (int i = 1; i <= n; ++i)
    if (static_cast<int>(d[idx(i - 1)].size()) != gog_row_len(k, n, i)) return false;
  auto at = [&](int i, int j) { return d[idx(i - 1)][idx(j - 1)]; };
  for (int j = 1; j <= gog_row_len(k, n, 1); ++j)
    if (at(1, j) != j) return false;
  for (int i = 1; i <= n; ++i) {
    int L = gog_row_len(k, n, i);
    for (int j = 1; j < L; ++j)
      if (at(i, j) >= at(i, j + 1)) return false;
    if (L == k && at(i, k) > i + k - 1) return false;
    if (i < n) {
      int L2 = gog_row_len(k, n, i + 1);
      for (int j = 1; j <= L2; ++j) {
        if (at(i, j) > at(i + 1, j)) return false;
        if (j < L && at(i + 1, j) > at(i, j + 1)) return false;
      }
    }
  }
  return true;
}

bool is_magog(int k, int n, const std::vector<std::vector<int>>& c) {
  if (static_cast<int>(c.size()) != k) return false;
  for (int i = 1; i <= k; ++i) {
    const auto& row = c[idx(i - 1)];
    if (static_cast<int>(row.size()) != n - i + 1) return false;
    for (int j = 1; j <= n - i + 1; ++j) {
      int v = row[idx(j - 1)];
      if (v < 1 || v > j) return false;
      if (j > 1 && row[idx(j - 2)] > v) return false;
      if (i > 1 && c[idx(i - 2)][idx(j - 1)] < v) return false;
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// ASMs

bool Asm::is_valid() const {
  if (n < 1 || static_cast<int>(e.size()) != n * n) return false;
  for (int i = 0; i < n; ++i) {
    int rs = 0, cs = 0;
    for (int j = 0; j < n; ++j) {
      int r = at(i, j), c = at(j, i);
      if (r < -1 || r > 1) return false;
      rs += r;
      cs += c;
      if (rs < 0 || rs > 1 || cs < 0 || cs > 1) return false;
    }
    if (rs != 1 || cs != 1) return false;
  }
  return true;
}

std::string Asm::to_string() const {
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (i) s += "\n";
    for (int j = 0; j < n; ++j) s += (j ? " " : "") + std::to_string(at(i, j));
  }
  return s;
}

void for_each_asm(int n, const Visitor<Asm>& visit) {
  if (n < 1) throw UsageError("ASM order must be positive");
  Asm a;
  a.n = n;
  a.e.assign(idx(n * n), 0);
  std::vector<int> col(idx(n), 0);  // running column sums, each 0 or 1
  bool stop = false;
  // Fill entry (i, j) given row prefix sum rs; entries tried in order -1, 0, 1.
  std::function<void(int, int, int)> rec = [&](int i, int j, int rs) {
    if (stop) return;
    if (j == n) {
      if (rs != 1) return;
      if (i + 1 == n) {
        if (!visit(a)) stop = true;
        return;
      }
      rec(i + 1, 0, 0);
      return;
    }
    std::size_t p = idx(i * n + j);
    for (int v = -1; v <= 1 && !stop; ++v) {
      int r2 = rs + v, c2 = col[idx(j)] + v;
      if (r2 < 0 || r2 > 1 || c2 < 0 || c2 > 1) continue;
      if (i + 1 == n && c2 != 1) continue;
      a.e[p] = v;
      col[idx(j)] = c2;
      rec(i, j + 1, r2);
      col[idx(j)] -= v;
      a.e[p] = 0;
    }
  };
  rec(0, 0, 0);
}

std::vector<Asm> enumerate_asm(int n) {
  std::vector<Asm> out;
  for_each_asm(n, [&](const Asm& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

Integer count_asm(int n) {
  Integer c = 0;
  for_each_asm(n, [&](const Asm&) {
    ++c;
    return true;
  });
  return c;
}

GelfandArray asm_to_monotone(const Asm& a) {
  if (!a.is_valid()) throw ValidationError("not an alternating sign matrix");
  GelfandArray t;
  t.kind = ArrayKind::GogTriangle;
  t.n = t.k = a.n;
  t.rows.resize(idx(a.n));
  std::vector<int> sum(idx(a.n), 0);
  for (int m = 1; m <= a.n; ++m) {
    for (int j = 0; j < a.n; ++j) sum[idx(j)] += a.at(m - 1, j);
    std::vector<int>& row = t.rows[idx(a.n - m)];
    for (int j = 0; j < a.n; ++j)
      if (sum[idx(j)] == 1) row.push_back(j + 1);
  }
  return t;
}

Asm monotone_to_asm(const GelfandArray& t) {
  if (t.kind != ArrayKind::GogTriangle || t.n != t.k || !t.is_valid())
    throw ValidationError("not a monotone triangle");
  int n = t.n;
  Asm a;
  a.n = n;
  a.e.assign(idx(n * n), 0);
  std::vector<int> prev(idx(n), 0);
  for (int m = 1; m <= n; ++m) {
    std::vector<int> cur(idx(n), 0);
    for (int c : t.rows[idx(n - m)]) cur[idx(c - 1)] = 1;
    for (int j = 0; j < n; ++j) a.e[idx((m - 1) * n + j)] = cur[idx(j)] - prev[idx(j)];
    prev = cur;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Gelfand arrays

bool GelfandArray::is_valid() const {
  switch (kind) {
    case ArrayKind::GogTriangle:
      return n == k && n >= 1 && is_gog(k, n, rows);
    case ArrayKind::GogTrapezoid:
      return k >= 1 && n >= k && is_gog(k, n, rows);
    case ArrayKind::MagogTriangle:
      return n == k && n >= 1 && is_magog(k, n, rows);
    case ArrayKind::MagogTrapezoid:
      return k >= 1 && n >= k && is_magog(k, n, rows);
  }
  return false;
}

std::string GelfandArray::to_string() const { return join_rows(rows); }

bool operator<(const GelfandArray& a, const GelfandArray& b) {
  return std::tie(a.kind, a.n, a.k, a.rows) < std::tie(b.kind, b.n, b.k, b.rows);
}

void for_each_gog(int k, int n, const Visitor<GelfandArray>& visit) {
  require_shape(k, n);
  GelfandArray g;
  g.kind = k == n ? ArrayKind::GogTriangle : ArrayKind::GogTrapezoid;
  g.n = n;
  g.k = k;
  g.rows.resize(idx(n));
  for (int j = 1; j <= k; ++j) g.rows[0].push_back(j);
  bool stop = false;
  // Row i (one-based) is filled entry by entry from row i-1.
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (stop) return;
    if (i > n) {
      if (!visit(g)) stop = true;
      return;
    }
    int L = gog_row_len(k, n, i);
    if (j > L) {
      rec(i + 1, 1);
      return;
    }
    const auto& up = g.rows[idx(i - 2)];
    int Lup = static_cast<int>(up.size());
    int lo = up[idx(j - 1)];
    if (j > 1) lo = std::max(lo, g.rows[idx(i - 1)][idx(j - 2)] + 1);
    int hi = j + 1 <= Lup ? up[idx(j)] : i + k - 1;
    if (j == k) hi = std::min(hi, i + k - 1);
    for (int v = lo; v <= hi && !stop; ++v) {
      g.rows[idx(i - 1)].push_back(v);
      rec(i, j + 1);
      g.rows[idx(i - 1)].pop_back();
    }
  };
  rec(2, 1);
}

std::vector<GelfandArray> enumerate_gog(int k, int n) {
  std::vector<GelfandArray> out;
  for_each_gog(k, n, [&](const GelfandArray& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

Integer count_gog(int k, int n) {
  Integer c = 0;
  for_each_gog(k, n, [&](const GelfandArray&) {
    ++c;
    return true;
  });
  return c;
}

std::vector<GelfandArray> enumerate_gog_by_chopping(int k, int n) {
  require_shape(k, n);
  std::set<GelfandArray> seen;
  for_each_asm(n, [&](const Asm& a) {
    GelfandArray t = asm_to_monotone(a);
    t.kind = k == n ? ArrayKind::GogTriangle : ArrayKind::GogTrapezoid;
    t.k = k;
    for (auto& row : t.rows)
      if (static_cast<int>(row.size()) > k) row.resize(idx(k));
    seen.insert(std::move(t));
    return true;
  });
  return {seen.begin(), seen.end()};
}

void for_each_magog(int k, int n, const Visitor<GelfandArray>& visit) {
  require_shape(k, n);
  GelfandArray g;
  g.kind = k == n ? ArrayKind::MagogTriangle : ArrayKind::MagogTrapezoid;
  g.n = n;
  g.k = k;
  g.rows.resize(idx(k));
  bool stop = false;
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (stop) return;
    if (i > k) {
      if (!visit(g)) stop = true;
      return;
    }
    if (j > n - i + 1) {
      rec(i + 1, 1);
      return;
    }
    int lo = j > 1 ? g.rows[idx(i - 1)][idx(j - 2)] : 1;
    int hi = j;
    if (i > 1) hi = std::min(hi, g.rows[idx(i - 2)][idx(j - 1)]);
    for (int v = lo; v <= hi && !stop; ++v) {
      g.rows[idx(i - 1)].push_back(v);
      rec(i, j + 1);
      g.rows[idx(i - 1)].pop_back();
    }
  };
  rec(1, 1);
}

std::vector<GelfandArray> enumerate_magog(int k, int n) {
  std::vector<GelfandArray> out;
  for_each_magog(k, n, [&](const GelfandArray& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

Integer count_magog(int k, int n) {
  Integer c = 0;
  for_each_magog(k, n, [&](const GelfandArray&) {
    ++c;
    return true;
  });
  return c;
}

// ---------------------------------------------------------------------------
// Border counts

namespace {

using Tally = std::map<std::vector<int>, Integer>;

const Tally& border_tally(bool gog, int k, int n) {
  static std::map<std::tuple<bool, int, int>, Tally> cache;
  static std::mutex mu;
  auto key = std::make_tuple(gog, k, n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Tally t;
  std::vector<int> a(idx(k));
  if (gog) {
    for_each_gog(k, n, [&](const GelfandArray& g) {
      for (int i = 1; i <= k; ++i) a[idx(i - 1)] = g.rows[idx(n - k + i - 1)][idx(k - i)];
      ++t[a];
      return true;
    });
  } else {
    for_each_magog(k, n, [&](const GelfandArray& g) {
      for (int i = 1; i <= k; ++i) a[idx(i - 1)] = g.rows[idx(i - 1)].back();
      ++t[a];
      return true;
    });
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(t)).first->second;
}

Integer lookup(const Tally& t, const std::vector<int>& a) {
  auto it = t.find(a);
  return it == t.end() ? Integer(0) : it->second;
}

}  // namespace

Integer border_count_magog(int k, int n, const std::vector<int>& a) {
  require_shape(k, n);
  if (static_cast<int>(a.size()) != k) throw UsageError("border vector must have k entries");
  return lookup(border_tally(false, k, n), a);
}

Integer border_count_gog(int k, int n, const std::vector<int>& a) {
  require_shape(k, n);
  if (static_cast<int>(a.size()) != k) throw UsageError("border vector must have k entries");
  return lookup(border_tally(true, k, n), a);
}

Integer tilde_m(int k, int n, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != k || k < 1) throw UsageError("border vector must have k >= 1 entries");
  if (!in_bar_land_of_gog(n, a)) throw DomainError("point outside the extended Gog region");
  if (!in_land_of_gog(n, a)) return 0;
  if (n == k) {
    if (k == 1) return 1;
    return tilde_m(k - 1, k, std::vector<int>(a.begin() + 1, a.end()));
  }
  // sum over n-1 >= b_1 >= ... >= b_k >= 1 with k-i+1 <= b_i <= a_i
  Integer total = 0;
  std::vector<int> b(idx(k));
  std::function<void(int)> rec = [&](int i) {
    if (i > k) {
      total += border_count_gog(k, n - 1, b);
      return;
    }
    int hi = std::min(a[idx(i - 1)], i == 1 ? n - 1 : b[idx(i - 2)]);
    for (int v = k - i + 1; v <= hi; ++v) {
      b[idx(i - 1)] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return total;
}

// ---------------------------------------------------------------------------
// Regions

bool in_land_of_magog(int n, const std::vector<int>& a) {
  int k = static_cast<int>(a.size());
  if (k < 1 || n < k || a[0] > n) return false;
  for (int i = 1; i <= k; ++i) {
    if (a[idx(i - 1)] > n - i + 1) return false;
    if (i < k && a[idx(i - 1)] < a[idx(i)]) return false;
  }
  return a[idx(k - 1)] >= 1;
}

bool in_bar_land_of_magog(int n, const std::vector<int>& a) {
  int k = static_cast<int>(a.size());
  if (k < 1 || n < k || n - a[0] < -1) return false;
  for (int i = 1; i < k; ++i)
    if (a[idx(i - 1)] - a[idx(i)] < -1) return false;
  return a[idx(k - 1)] >= 0;
}

bool in_land_of_gog(int n, const std::vector<int>& a) {
  int k = static_cast<int>(a.size());
  if (k < 1 || n < k || a[0] > n) return false;
  for (int i = 1; i <= k; ++i) {
    if (a[idx(i - 1)] < k - i + 1) return false;
    if (i < k && a[idx(i - 1)] < a[idx(i)]) return false;
  }
  return true;
}

bool in_bar_land_of_gog(int n, const std::vector<int>& a) {
  int k = static_cast<int>(a.size());
  if (k < 1 || n < k || n - a[0] < -1) return false;
  for (int i = 1; i <= k; ++i) {
    if (a[idx(i - 1)] < k - i) return false;
    if (i < k && a[idx(i - 1)] < a[idx(i)]) return false;
  }
  if (k >= 2 && a[0] == n + 1 && a[1] > n) return false;
  if (k >= 2 && n == k && a[0] == k && a[1] >= k) return false;
  return true;
}

namespace {

/// Vectors with lo_i <= a_i <= hi_i, filtered by pred, in lexicographic order.
std::vector<std::vector<int>> box_points(const std::vector<int>& lo, const std::vector<int>& hi,
                                         const std::function<bool(const std::vector<int>&)>& pred) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(lo.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == lo.size()) {
      if (pred(a)) out.push_back(a);
      return;
    }
    for (int v = lo[i]; v <= hi[i]; ++v) {
      a[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<std::vector<int>> land_of_magog_points(int k, int n) {
  std::vector<int> lo(idx(k), 1), hi(idx(k), n);
  return box_points(lo, hi, [n](const std::vector<int>& a) { return in_land_of_magog(n, a); });
}

std::vector<std::vector<int>> bar_land_of_magog_points(int k, int n) {
  std::vector<int> lo(idx(k)), hi(idx(k));
  for (int i = 1; i <= k; ++i) {
    lo[idx(i - 1)] = -(k - i);
    hi[idx(i - 1)] = n + i;
  }
  return box_points(lo, hi, [n](const std::vector<int>& a) { return in_bar_land_of_magog(n, a); });
}

std::vector<std::vector<int>> land_of_gog_points(int k, int n) {
  std::vector<int> lo(idx(k), 1), hi(idx(k), n);
  return box_points(lo, hi, [n](const std::vector<int>& a) { return in_land_of_gog(n, a); });
}

std::vector<std::vector<int>> bar_land_of_gog_points(int k, int n) {
  std::vector<int> lo(idx(k)), hi(idx(k), n + 1);
  for (int i = 1; i <= k; ++i) lo[idx(i - 1)] = k - i;
  return box_points(lo, hi, [n](const std::vector<int>& a) { return in_bar_land_of_gog(n, a); });
}

Integer asm_number(int n) {
  if (n < 0) throw UsageError("ASM order must be nonnegative");
  auto fact = [](int m) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return f;
  };
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= fact(3 * i + 1);
    den *= fact(n + i);
  }
  return num / den;
}

}  // namespace asmkit
