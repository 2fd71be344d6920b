#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: determinants by permutation expansion, multichains by direct
// search, saturated chains by DFS over covers, and a deterministic
// normalized-shape sampler for the property suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ladder/bigint.hpp"
#include "ladder/lattice.hpp"
#include "ladder/poly.hpp"
#include "ladder/poset.hpp"
#include "ladder/shape.hpp"

namespace oracles {

inline ladder::Polynomial permutation_det(const ladder::LadderShape& shape,
                                          const ladder::ColumnTuple& cols) {
  const int n = static_cast<int>(cols.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ladder::Polynomial det;
  do {
    ladder::Monomial mono;
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      const int col = cols[perm[i]];
      if (col < shape.u(i + 1) || col > shape.v(i + 1)) zero = true;
      else mono = mono * ladder::Monomial::variable({i + 1, col});
    }
    if (zero) continue;
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    det.add_term(mono, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// multichains x_1 <= ... <= x_d by direct recursion over the point list
inline ladder::BigInt count_multichains_naive(const std::vector<ladder::FiberPoint>& points,
                                              int d) {
  if (d == 0) return 1;
  ladder::BigInt total = 0;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      ++total;
      return;
    }
    for (std::size_t i = 0; i < points.size(); ++i)
      if (ladder::fiber_leq(points[from], points[i])) self(self, i, left - 1);
  };
  for (std::size_t i = 0; i < points.size(); ++i) rec(rec, i, d - 1);
  return total;
}

// every saturated chain length from bottom up to top, by DFS over covers
inline std::vector<int> saturated_chain_lengths(const ladder::FinitePoset& poset, int bottom,
                                                int top) {
  std::vector<std::vector<int>> up(poset.size());
  for (auto [lo, hi] : poset.covers()) up[lo].push_back(hi);
  std::vector<int> lengths;
  auto dfs = [&](auto&& self, int x, int len) -> void {
    if (x == top) {
      lengths.push_back(len);
      return;
    }
    for (int y : up[x])
      if (poset.leq(y, top)) self(self, y, len + 1);
  };
  dfs(dfs, bottom, 0);
  return lengths;
}

// every normalized shape with n <= max_n and m <= max_m, in a fixed order
inline std::vector<ladder::LadderShape> all_normalized_shapes(int max_n, int max_m) {
  std::vector<ladder::LadderShape> shapes;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = n + 1; m <= max_m; ++m) {
      std::vector<ladder::Interval> rows(n);
      auto rec_v = [&](auto&& self, int i) -> void {  // ends, bottom-up
        if (i == 0) {
          ladder::LadderShape shape(rows);
          if (ladder::is_normalized(shape)) shapes.push_back(shape);
          return;
        }
        const int lo = std::max(rows[i - 1].lo + 1, i < n ? rows[i].lo - 1 : 2);
        const int hi = i < n ? rows[i].hi - 1 : m;
        for (int v = lo; v <= hi; ++v) {
          rows[i - 1].hi = v;
          self(self, i - 1);
        }
      };
      auto rec_u = [&](auto&& self, int i) -> void {  // starts, top-down
        if (i == n) {
          rows[n - 1].hi = m;
          if (n == 1) {
            ladder::LadderShape shape(rows);
            if (ladder::is_normalized(shape)) shapes.push_back(shape);
          } else {
            rec_v(rec_v, n - 1);
          }
          return;
        }
        for (int u = rows[i - 1].lo + 1; u <= m - 1 - (n - 1 - i); ++u) {
          rows[i].lo = u;
          self(self, i + 1);
        }
      };
      rows[0].lo = 1;
      rec_u(rec_u, 1);
    }
  }
  return shapes;
}

// deterministic sampler of normalized shapes with n <= max_n, m <= max_m
inline std::vector<ladder::LadderShape> random_normalized_shapes(std::size_t count,
                                                                 unsigned seed, int max_n = 4,
                                                                 int max_m = 9) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<ladder::LadderShape> shapes;
  while (shapes.size() < count) {
    const int n = uniform(1, max_n);
    const int m = uniform(n + 1, max_m);
    std::vector<ladder::Interval> rows(n);
    rows[0].lo = 1;
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      const int hi = m - 1 - (n - 1 - i);  // leave room for the rows after
      if (rows[i - 1].lo + 1 > hi) ok = false;
      else rows[i].lo = uniform(rows[i - 1].lo + 1, hi);
    }
    if (!ok) continue;
    rows[n - 1].hi = m;
    for (int i = n - 2; i >= 0 && ok; --i) {
      const int lo = std::max(rows[i].lo + 1, rows[i + 1].lo - 1);
      const int hi = rows[i + 1].hi - 1;
      if (lo > hi) ok = false;
      else rows[i].hi = uniform(lo, hi);
    }
    if (!ok) continue;
    ladder::LadderShape shape(rows);
    if (ladder::is_normalized(shape)) shapes.push_back(shape);
  }
  return shapes;
}

}  // namespace oracles
