#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ladder/bigint.hpp"
#include "ladder/config.hpp"
#include "ladder/shape.hpp"

namespace ladder {

// A strictly increasing in-interval column tuple: the index of one maximal
// minor.
using ColumnTuple = std::vector<int>;

bool tuple_in_lattice(const LadderShape& shape, const ColumnTuple& c);

// A column tuple together with the copy index in [1, r].
struct FiberPoint {
  ColumnTuple tuple;
  int copy = 1;
  friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
  std::string to_text() const;  // "(c1,...,cn;copy)"
};

// Componentwise order on all n+1 coordinates; meet and join are the
// componentwise min and max and never leave the lattice.
bool fiber_leq(const FiberPoint& a, const FiberPoint& b);
FiberPoint fiber_meet(const FiberPoint& a, const FiberPoint& b);
FiberPoint fiber_join(const FiberPoint& a, const FiberPoint& b);

// Number of lattice elements, by the row-by-row prefix-sum recurrence; never
// materializes the lattice.
BigInt count_lattice(const LadderShape& shape);

// All lattice elements in lexicographic order. Throws CapExceeded carrying
// the exact count when it exceeds the cap.
std::vector<ColumnTuple> enumerate_lattice(const LadderShape& shape,
                                           std::size_t cap = Caps{}.max_lattice);

/*
 * The product of the column-tuple lattice with [r], materialized and indexed
 * in lexicographic order (tuple first, copy last), which is a linear
 * extension of the componentwise order. Small instances keep the order
 * relation as a bit matrix; larger ones compare tuples on demand.
 */
class FiberLattice {
 public:
  FiberLattice(const LadderShape& shape, int r, const Caps& caps = {});

  std::size_t size() const { return points_.size(); }
  const FiberPoint& at(std::size_t i) const { return points_[i]; }
  const std::vector<FiberPoint>& points() const { return points_; }
  int copies() const { return r_; }
  const LadderShape& shape() const { return shape_; }

  bool leq(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> index_of(const FiberPoint& p) const;
  bool has_bitmatrix() const { return !below_.empty(); }

  // iterates y with y <= x, in index order
  template <typename F>
  void for_each_below(std::size_t x, F&& fn) const {
    if (has_bitmatrix()) {
      const std::uint64_t* row = below_row(x);
      for (std::size_t w = 0; w <= x / 64; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          unsigned bit = static_cast<unsigned>(__builtin_ctzll(bits));
          fn(w * 64 + bit);
          bits &= bits - 1;
        }
      }
    } else {
      for (std::size_t y = 0; y <= x; ++y)
        if (leq(y, x)) fn(y);
    }
  }

 private:
  const std::uint64_t* below_row(std::size_t x) const { return below_.data() + x * words_; }

  LadderShape shape_;
  int r_;
  std::vector<FiberPoint> points_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> below_;  // row x: bitset of {y : y <= x}
};

// The quadratic relation attached to one incomparable pair.
struct HibiRelation {
  FiberPoint a, b, meet, join;
  std::string to_text() const;  // "T[a]·T[b] = T[meet]·T[join]"
};

// One relation per unordered incomparable pair, in index order.
std::vector<HibiRelation> hibi_relations(const LadderShape& shape, int r,
                                         const Caps& caps = {});

// HF(0..dmax) where HF(d) counts the multichains x_1 <= ... <= x_d, computed
// by iterated order-respecting prefix sums.
std::vector<BigInt> multichain_hilbert(const LadderShape& shape, int r, int dmax,
                                       const Caps& caps = {});

// Numerator coefficients of the Hilbert series over (1-t)^dim.
struct HVector {
  std::vector<BigInt> coeffs;  // h_0 ... h_s, h_s != 0
  long long dim = 0;           // Krull dimension used in the differencing

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool symmetric() const;
  std::string to_text() const;  // "(1, 5, 3)"
};

HVector h_vector(const LadderShape& shape, int r, const Caps& caps = {});

}  // namespace ladder
