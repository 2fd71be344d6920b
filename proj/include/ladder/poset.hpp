#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ladder/config.hpp"
#include "ladder/lattice.hpp"
#include "ladder/shape.hpp"

namespace ladder {

/*
 * One join-irreducible element. Rows 1..n index the ladder rows, with
 * col in [u_row + 1, v_row]; the extra row n+1 carries the copy chain with
 * col = k in [2, r].
 */
struct JoinIrr {
  int row = 0;
  int col = 0;
  friend bool operator==(const JoinIrr&, const JoinIrr&) = default;
  friend auto operator<=>(const JoinIrr&, const JoinIrr&) = default;
  std::string to_text() const;  // "a[i,j]"
};

// Index-arithmetic order for ladder-row elements: a[k,l] <= a[i,j] iff
// k >= i and l - j <= k - i. Same-row pairs of the copy chain reduce to a
// column comparison, which this formula also covers; mixed-family pairs are
// incomparable and must go through FinitePoset::leq.
bool ji_leq(const JoinIrr& a, const JoinIrr& b);

// The lattice element a join-irreducible stands for.
FiberPoint expand(const JoinIrr& a, const LadderShape& shape, int r);

// Length of every saturated chain from b up to a (they all agree); throws on
// incomparable arguments.
int chain_length(const JoinIrr& a, const JoinIrr& b);

/*
 * The poset of join-irreducibles of the fiber lattice, built directly from
 * the shape: elements in row-major order, cover edges from the two local
 * rules (same row, previous column; next row, next column) plus the copy
 * chain. Carries its shape so diagram exports and expansions need no extra
 * arguments.
 */
class FinitePoset {
 public:
  FinitePoset(const LadderShape& shape, int r);

  std::size_t size() const { return elements_.size(); }
  const std::vector<JoinIrr>& elements() const { return elements_; }
  const JoinIrr& at(std::size_t i) const { return elements_[i]; }
  // cover edges (lower, upper), sorted by (lower, upper)
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int index_of(const JoinIrr& a) const;  // -1 when absent

  // dispatches between the ladder-row formula and the copy chain
  bool leq(int a, int b) const;

  const LadderShape& shape() const { return shape_; }
  int copies() const { return r_; }

  int component_count() const { return component_count_; }
  const std::vector<int>& component_labels() const { return component_; }

  std::vector<int> minimal_indices() const;  // zero in-degree, ascending
  std::vector<int> maximal_indices() const;  // zero out-degree, ascending

 private:
  LadderShape shape_;
  int r_ = 1;
  std::vector<JoinIrr> elements_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> component_;
  int component_count_ = 0;
};

FinitePoset join_irreducibles(const LadderShape& shape, int r);

// Formula versions (gap profile only); each is checked against the cover
// graph when the poset is built.
std::vector<JoinIrr> minimals(const LadderShape& shape, int r);
std::vector<JoinIrr> maximals(const LadderShape& shape, int r);

struct ComponentInfo {
  int count = 0;
  std::vector<int> labels;  // per element, 0-based, first-seen order
};
ComponentInfo components(const LadderShape& shape, int r);

using Chain = std::vector<int>;  // element indices, bottom to top

// All maximal chains, DFS from the minimal elements along covers, in
// deterministic order. Throws CapExceeded (with the exact chain count) when
// there are more than the cap.
std::vector<Chain> maximal_chains(const FinitePoset& poset,
                                  std::size_t cap = Caps{}.max_chains);

BigInt count_maximal_chains(const FinitePoset& poset);

struct PurityResult {
  bool pure = true;
  int rank = 0;      // longest maximal chain length
  int shortest = 0;  // shortest maximal chain length
  // two maximal chains of distinct lengths when impure (short, long)
  std::optional<std::pair<Chain, Chain>> witness;
  bool via_enumeration = false;
};

// Decides purity by enumerating maximal chains, falling back to a
// longest/shortest-path DP when the enumeration cap is hit.
PurityResult purity(const FinitePoset& poset, std::size_t chain_cap = Caps{}.max_chains);

int poset_rank(const FinitePoset& poset);

// Brute-force join-irreducibles: builds the whole fiber lattice, takes the
// transitive reduction of <=, and keeps the elements with exactly one lower
// cover. Ground truth for the construction above.
std::vector<FiberPoint> join_irreducibles_oracle(const LadderShape& shape, int r,
                                                 const Caps& caps = {});

std::string to_dot(const FinitePoset& poset);
std::string to_grid(const FinitePoset& poset, const LadderShape& shape);

}  // namespace ladder
