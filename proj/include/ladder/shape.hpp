#pragma once

#include <string>
#include <vector>

namespace ladder {

// One row of the ladder: indeterminate entries sit exactly in the 1-based
// column range [lo, hi].
struct Interval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/*
 * The staircase region of an n x m ladder matrix, given by one column
 * interval per row. The normalized form satisfies
 *
 *   1 = u_1 < u_2 < ... < u_n < m,   1 < v_1 < v_2 < ... < v_n = m,
 *   u_i < v_i,                       u_i <= v_{i-1} + 1,          n < m.
 *
 * Raw shapes (straight from parsing) may violate these; normalize() repairs
 * them. Accessors u(i), v(i) are 1-based like everything else in this
 * library.
 */
class LadderShape {
 public:
  LadderShape() = default;
  explicit LadderShape(std::vector<Interval> rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return m_; }
  bool empty() const { return rows_.empty(); }
  const std::vector<Interval>& intervals() const { return rows_; }
  int u(int i) const { return rows_.at(i - 1).lo; }
  int v(int i) const { return rows_.at(i - 1).hi; }

  std::string to_text() const;  // "1-5,4-6"

  friend bool operator==(const LadderShape&, const LadderShape&) = default;

 private:
  std::vector<Interval> rows_;
  int m_ = 0;  // column count = max hi
};

// Parses a comma-separated list of "a-b" interval tokens, whitespace
// insensitive. No normalization is applied. Throws std::invalid_argument on
// malformed tokens, an empty list, or a > b.
LadderShape parse_shape(const std::string& text);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every normalized-form invariant; violations are data, not faults.
ValidationReport validate(const LadderShape& shape);
bool is_normalized(const LadderShape& shape);
// Throws std::invalid_argument listing the violations.
void require_normalized(const LadderShape& shape);

// A row gap that is either a finite positive integer or the unbounded
// sentinel used at epsilon_n and theta_0. Comparisons treat the sentinel as
// larger than any integer; it never collapses to a number.
class Gap {
 public:
  static Gap unbounded() { return Gap(true, 0); }
  static Gap finite(int value) { return Gap(false, value); }

  bool is_unbounded() const { return unbounded_; }
  int value() const;  // throws std::logic_error when unbounded

  bool greater_than(int k) const { return unbounded_ || value_ > k; }
  bool equals(int k) const { return !unbounded_ && value_ == k; }

  std::string to_text() const;  // decimal or "inf"

  friend bool operator==(const Gap&, const Gap&) = default;

 private:
  Gap(bool unbounded, int value) : unbounded_(unbounded), value_(value) {}
  bool unbounded_;
  int value_;
};

/*
 * Row-gap statistics of a normalized shape:
 *   delta_i = v_i - u_i            (i in [n])
 *   eps_j   = u_{j+1} - u_j        (j in [n-1]),  eps_n   = unbounded
 *   theta_j = v_{j+1} - v_j        (j in [n-1]),  theta_0 = unbounded
 * Derived data only; recomputable from the owning shape.
 */
struct GapProfile {
  std::vector<int> delta;   // delta[i-1] = delta_i
  std::vector<Gap> eps;     // eps[j-1] = eps_j, j in [1, n]
  std::vector<Gap> theta;   // theta[j] = theta_j, j in [0, n-1]

  Gap epsilon_at(int j) const { return eps.at(j - 1); }   // j in [1, n]
  Gap theta_at(int j) const { return theta.at(j); }       // j in [0, n-1]
  long long delta_sum() const;
};

GapProfile gaps(const LadderShape& shape);

// The rows [p, q] of one block, plus the least row index in the block whose
// epsilon gap exceeds 1 (the unbounded sentinel counts as > 1).
struct Block {
  int p = 0;
  int q = 0;
  int i_min = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

// Partition of [n] at the indices where v_i < u_{i+1}; the ladder matrix is
// block diagonal across these cuts.
struct BlockDecomposition {
  std::vector<int> cuts;     // C = {i in [n-1] : v_i < u_{i+1}} + {n}, ascending
  std::vector<Block> blocks; // t blocks, p_1 = 1, p_{s+1} = q_s + 1, q_t = n
};

BlockDecomposition blocks(const LadderShape& shape);

// One reduction applied while normalizing. Row/column indices refer to the
// labels current at the time the step was taken, so replaying the trace on
// the raw input reproduces the normalized shape.
struct NormalizationStep {
  enum class Kind {
    BumpedDuplicateU,     // row's start bumped past the previous row's start
    ShrunkDuplicateV,     // row's end pulled below the next row's end
    RemovedZeroColumns,   // all-zero column range [lo, hi] deleted, relabeled
    DroppedDegenerateRow, // single-column row factored out
    ReducedSquareCase,    // nothing left to decide: fiber is a polynomial ring
  };
  Kind kind;
  int row = 0;
  int lo = 0;
  int hi = 0;

  std::string to_text() const;
  friend bool operator==(const NormalizationStep&, const NormalizationStep&) = default;
};

using NormalizationTrace = std::vector<NormalizationStep>;

struct NormalizeResult {
  LadderShape shape;
  NormalizationTrace trace;
  bool reduced_away() const;  // trace ends in ReducedSquareCase
};

/*
 * Repairs a raw shape into normalized form, in a fixed order: start bumps
 * (top-down), end shrinks (bottom-up), zero-column removal, degenerate-row
 * drops, then the square-case check, repeating until stable. Requires
 * nonempty intervals with u_i <= v_i and nondecreasing u's and v's; throws
 * std::invalid_argument when an interval would empty out.
 */
NormalizeResult normalize(const LadderShape& raw);

// Applies a recorded trace to a raw shape; used to confirm traces replay.
LadderShape replay_trace(const LadderShape& raw, const NormalizationTrace& trace);

}  // namespace ladder
