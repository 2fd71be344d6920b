#include "ladder/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ladder/errors.hpp"

namespace ladder {

std::string JoinIrr::to_text() const {
  return "a[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

bool ji_leq(const JoinIrr& a, const JoinIrr& b) {
  // a = a[k,l], b = a[i,j]: a <= b iff k >= i and l - j <= k - i
  return a.row >= b.row && a.col - b.col <= a.row - b.row;
}

FiberPoint expand(const JoinIrr& a, const LadderShape& shape, int r) {
  require_normalized(shape);
  const int n = shape.rows();
  if (a.row < 1 || a.row > n + 1) throw std::invalid_argument("expand: row out of range");
  FiberPoint p;
  p.tuple.reserve(n);
  if (a.row == n + 1) {
    if (a.col < 2 || a.col > r) throw std::invalid_argument("expand: copy index out of range");
    for (int i = 1; i <= n; ++i) p.tuple.push_back(shape.u(i));
    p.copy = a.col;
  } else {
    if (a.col < shape.u(a.row) + 1 || a.col > shape.v(a.row))
      throw std::invalid_argument("expand: column out of range for row " + std::to_string(a.row));
    for (int i = 1; i < a.row; ++i) p.tuple.push_back(shape.u(i));
    p.tuple.push_back(a.col);
    for (int i = a.row + 1; i <= n; ++i)
      p.tuple.push_back(std::max(a.col + (i - a.row), shape.u(i)));
    p.copy = 1;
  }
  detail::check(tuple_in_lattice(shape, p.tuple), "expansion lands in the lattice");
  return p;
}

int chain_length(const JoinIrr& a, const JoinIrr& b) {
  if (!ji_leq(b, a))
    throw std::invalid_argument("chain_length: " + b.to_text() + " is not below " + a.to_text());
  return 2 * (b.row - a.row) + (a.col - b.col);
}

FinitePoset::FinitePoset(const LadderShape& shape, int r) : shape_(shape), r_(r) {
  if (r < 1) throw std::invalid_argument("copy count r must be >= 1");
  if (shape.empty()) return;  // reduced square case: empty poset
  require_normalized(shape);
  const int n = shape.rows();
  const GapProfile g = gaps(shape);

  for (int i = 1; i <= n; ++i)
    for (int j = shape.u(i) + 1; j <= shape.v(i); ++j) elements_.push_back({i, j});
  for (int k = 2; k <= r; ++k) elements_.push_back({n + 1, k});
  detail::check(static_cast<long long>(elements_.size()) == g.delta_sum() + r - 1,
                "|P| = sum of deltas + r - 1");

  // cover rules: a[i,j-1] < a[i,j] when j >= u_i + 2, and
  // a[i+1,j+1] < a[i,j] when i != n and j >= u_{i+1}; the copy chain is a path
  for (int upper = 0; upper < static_cast<int>(elements_.size()); ++upper) {
    const JoinIrr e = elements_[upper];
    if (e.row <= n) {
      if (e.col >= shape.u(e.row) + 2) covers_.push_back({index_of({e.row, e.col - 1}), upper});
      if (e.row != n && e.col >= shape.u(e.row + 1))
        covers_.push_back({index_of({e.row + 1, e.col + 1}), upper});
    } else if (e.col > 2) {
      covers_.push_back({index_of({e.row, e.col - 1}), upper});
    }
  }
  for (auto [lo, up] : covers_) detail::check(lo >= 0 && up >= 0, "cover endpoints exist");
  std::sort(covers_.begin(), covers_.end());

  // connected components by union-find over the cover edges
  std::vector<int> parent(elements_.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [lo, up] : covers_) parent[find(lo)] = find(up);
  component_.assign(elements_.size(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    int root = find(static_cast<int>(i));
    if (component_[root] < 0) component_[root] = component_count_++;
    component_[i] = component_[root];
  }
  const int cuts = static_cast<int>(blocks(shape).cuts.size());
  detail::check(component_count_ == (r == 1 ? cuts : cuts + 1),
                "component count matches the block count");

  // the formula minima/maxima must be exactly the degree-zero nodes
  std::vector<JoinIrr> min_formula = minimals(shape, r), max_formula = maximals(shape, r);
  std::vector<JoinIrr> min_graph, max_graph;
  for (int i : minimal_indices()) min_graph.push_back(elements_[i]);
  for (int i : maximal_indices()) max_graph.push_back(elements_[i]);
  detail::check(min_formula == min_graph, "minimal elements match the cover graph");
  detail::check(max_formula == max_graph, "maximal elements match the cover graph");
}

int FinitePoset::index_of(const JoinIrr& a) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
  if (it == elements_.end() || !(*it == a)) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool FinitePoset::leq(int a, int b) const {
  const JoinIrr &x = elements_[a], &y = elements_[b];
  const int n = shape_.rows();
  if (x.row <= n && y.row <= n) return ji_leq(x, y);
  if (x.row == n + 1 && y.row == n + 1) return x.col <= y.col;
  return false;  // copy chain and ladder rows never compare
}

std::vector<int> FinitePoset::minimal_indices() const {
  std::vector<char> has_lower(elements_.size(), 0);
  for (auto [lo, up] : covers_) has_lower[up] = 1;
  std::vector<int> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!has_lower[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> FinitePoset::maximal_indices() const {
  std::vector<char> has_upper(elements_.size(), 0);
  for (auto [lo, up] : covers_) has_upper[lo] = 1;
  std::vector<int> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!has_upper[i]) out.push_back(static_cast<int>(i));
  return out;
}

FinitePoset join_irreducibles(const LadderShape& shape, int r) { return FinitePoset(shape, r); }

std::vector<JoinIrr> minimals(const LadderShape& shape, int r) {
  require_normalized(shape);
  const GapProfile g = gaps(shape);
  std::vector<JoinIrr> out;
  for (int i = 1; i <= shape.rows(); ++i)
    if (g.epsilon_at(i).greater_than(1)) out.push_back({i, shape.u(i) + 1});
  if (r >= 2) out.push_back({shape.rows() + 1, 2});
  return out;
}

std::vector<JoinIrr> maximals(const LadderShape& shape, int r) {
  require_normalized(shape);
  const GapProfile g = gaps(shape);
  std::vector<JoinIrr> out;
  for (int i = 1; i <= shape.rows(); ++i)
    if (g.theta_at(i - 1).greater_than(1)) out.push_back({i, shape.v(i)});
  if (r >= 2) out.push_back({shape.rows() + 1, r});
  return out;
}

ComponentInfo components(const LadderShape& shape, int r) {
  FinitePoset p(shape, r);
  return {p.component_count(), p.component_labels()};
}

namespace {

struct CoverGraph {
  std::vector<std::vector<int>> up, down;
  explicit CoverGraph(const FinitePoset& p)
      : up(p.size()), down(p.size()) {
    for (auto [lo, hi] : p.covers()) {
      up[lo].push_back(hi);
      down[hi].push_back(lo);
    }
  }
};

// indices ordered so that every element appears after its lower covers
std::vector<int> topological(const FinitePoset& p, const CoverGraph& g) {
  std::vector<int> indeg(p.size(), 0), order;
  order.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) indeg[x] = static_cast<int>(g.down[x].size());
  std::vector<int> queue;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (indeg[x] == 0) queue.push_back(static_cast<int>(x));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    order.push_back(x);
    for (int y : g.up[x])
      if (--indeg[y] == 0) queue.push_back(y);
  }
  detail::check(order.size() == p.size(), "cover graph is acyclic");
  return order;
}

}  // namespace

BigInt count_maximal_chains(const FinitePoset& poset) {
  if (poset.size() == 0) return 0;
  CoverGraph g(poset);
  std::vector<BigInt> paths(poset.size(), 0);
  for (int x : topological(poset, g)) {
    if (g.down[x].empty()) paths[x] = 1;
    for (int y : g.up[x]) paths[y] += paths[x];
  }
  BigInt total = 0;
  for (std::size_t x = 0; x < poset.size(); ++x)
    if (g.up[x].empty()) total += paths[x];
  return total;
}

std::vector<Chain> maximal_chains(const FinitePoset& poset, std::size_t cap) {
  BigInt total = count_maximal_chains(poset);
  if (total > cap)
    throw CapExceeded("poset has " + total.str() + " maximal chains, cap is " +
                          std::to_string(cap),
                      total);
  CoverGraph g(poset);
  std::vector<Chain> out;
  Chain current;
  auto dfs = [&](auto&& self, int x) -> void {
    current.push_back(x);
    if (g.up[x].empty()) {
      out.push_back(current);
    } else {
      for (int y : g.up[x]) self(self, y);
    }
    current.pop_back();
  };
  for (std::size_t x = 0; x < poset.size(); ++x)
    if (g.down[x].empty()) dfs(dfs, static_cast<int>(x));
  return out;
}

namespace {

PurityResult purity_by_paths(const FinitePoset& poset) {
  PurityResult res;
  res.via_enumeration = false;
  if (poset.size() == 0) return res;
  CoverGraph g(poset);
  const std::vector<int> order = topological(poset, g);
  std::vector<int> lmin(poset.size(), 0), lmax(poset.size(), 0);
  for (int x : order) {
    if (g.down[x].empty()) continue;
    int mn = INT32_MAX, mx = -1;
    for (int y : g.down[x]) {
      mn = std::min(mn, lmin[y]);
      mx = std::max(mx, lmax[y]);
    }
    lmin[x] = mn + 1;
    lmax[x] = mx + 1;
  }
  int overall_min = INT32_MAX, overall_max = -1;
  int argmin = -1, argmax = -1;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    if (!g.up[x].empty()) continue;
    if (lmin[x] < overall_min) overall_min = lmin[x], argmin = static_cast<int>(x);
    if (lmax[x] > overall_max) overall_max = lmax[x], argmax = static_cast<int>(x);
  }
  res.rank = overall_max;
  res.shortest = overall_min;
  res.pure = overall_min == overall_max;
  if (!res.pure) {
    auto walk = [&](int top, const std::vector<int>& level, bool shortest) {
      Chain chain{top};
      int x = top;
      while (!g.down[x].empty()) {
        int next = -1;
        for (int y : g.down[x])
          if (level[y] == level[x] - 1 && (next < 0 || y < next) &&
              (shortest ? lmin[y] : lmax[y]) == level[x] - 1)
            next = y;
        detail::check(next >= 0, "path DP reconstruction");
        chain.push_back(next);
        x = next;
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    };
    res.witness = {walk(argmin, lmin, true), walk(argmax, lmax, false)};
  }
  return res;
}

}  // namespace

PurityResult purity(const FinitePoset& poset, std::size_t chain_cap) {
  try {
    std::vector<Chain> chains = maximal_chains(poset, chain_cap);
    PurityResult res;
    res.via_enumeration = true;
    if (chains.empty()) return res;
    const Chain* shortest = &chains.front();
    const Chain* longest = &chains.front();
    for (const Chain& c : chains) {
      if (c.size() < shortest->size()) shortest = &c;
      if (c.size() > longest->size()) longest = &c;
    }
    res.rank = static_cast<int>(longest->size()) - 1;
    res.shortest = static_cast<int>(shortest->size()) - 1;
    res.pure = res.rank == res.shortest;
    if (!res.pure) res.witness = {*shortest, *longest};
    return res;
  } catch (const CapExceeded&) {
    return purity_by_paths(poset);
  }
}

int poset_rank(const FinitePoset& poset) { return purity_by_paths(poset).rank; }

std::vector<FiberPoint> join_irreducibles_oracle(const LadderShape& shape, int r,
                                                 const Caps& caps) {
  FiberLattice lat(shape, r, caps);
  if (!lat.has_bitmatrix())
    throw CapExceeded("join-irreducible oracle needs the order bit matrix (size " +
                          std::to_string(lat.size()) + ")",
                      BigInt(lat.size()));
  const std::size_t sz = lat.size();
  const std::size_t words = (sz + 63) / 64;
  // strict below / strict above sets as bit rows
  std::vector<std::uint64_t> below(sz * words, 0), above(sz * words, 0);
  for (std::size_t x = 0; x < sz; ++x)
    for (std::size_t y = 0; y < sz; ++y)
      if (y != x && lat.leq(y, x)) {
        below[x * words + y / 64] |= std::uint64_t{1} << (y % 64);
        above[y * words + x / 64] |= std::uint64_t{1} << (x % 64);
      }
  std::vector<FiberPoint> out;
  for (std::size_t x = 0; x < sz; ++x) {
    // lower covers of x = maximal elements of the strict below set
    int lower_covers = 0;
    for (std::size_t y = 0; y < sz && lower_covers < 2; ++y) {
      if (!((below[x * words + y / 64] >> (y % 64)) & 1)) continue;
      bool maximal = true;
      for (std::size_t w = 0; w < words && maximal; ++w)
        if (below[x * words + w] & above[y * words + w]) maximal = false;
      if (maximal) ++lower_covers;
    }
    if (lower_covers == 1) out.push_back(lat.at(x));
  }
  return out;
}

std::string to_dot(const FinitePoset& poset) {
  std::ostringstream out;
  out << "digraph poset {\n";
  if (poset.size() > 0) out << "  rankdir=BT;\n";
  for (const JoinIrr& e : poset.elements())
    out << "  a_" << e.row << '_' << e.col << " [label=\"" << e.to_text() << "\"];\n";
  for (auto [lo, up] : poset.covers()) {
    const JoinIrr &a = poset.at(lo), &b = poset.at(up);
    out << "  a_" << a.row << '_' << a.col << " -> a_" << b.row << '_' << b.col << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_grid(const FinitePoset& poset, const LadderShape& shape) {
  if (shape.empty()) return "";
  const int n = shape.rows(), m = shape.cols();
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(m, "0"));
  for (const JoinIrr& e : poset.elements())
    if (e.row <= n) cells[e.row - 1][e.col - 1] = e.to_text();
  std::vector<std::size_t> width(m, 1);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) width[j] = std::max(width[j], cells[i][j].size());
  std::ostringstream out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j) out << ' ';
      out << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
    }
    out << '\n';
  }
  if (poset.copies() >= 2) {
    out << "chain:";
    for (int k = 2; k <= poset.copies(); ++k)
      out << (k > 2 ? " < " : " ") << JoinIrr{n + 1, k}.to_text();
    out << '\n';
  }
  return out.str();
}

}  // namespace ladder
