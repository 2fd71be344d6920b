#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ladder/config.hpp"
#include "ladder/lattice.hpp"
#include "ladder/poly.hpp"
#include "ladder/shape.hpp"

namespace ladder {

// The maximal minor indexed by a lattice element: exact determinant of the
// n x n submatrix on those columns, with the ladder zero pattern respected.
// Throws CapExceeded when n exceeds the determinant bound.
Polynomial minor_det(const LadderShape& shape, const ColumnTuple& c,
                     const Caps& caps = {});

// The diagonal monomial x[1,c1]*...*x[n,cn], which is the expected leading
// term of minor_det under the row-then-column order.
Monomial diagonal_monomial(const ColumnTuple& c);

struct DiagonalCheck {
  bool ok = true;
  std::optional<ColumnTuple> counterexample;
};

// Verifies, over the whole lattice, that every maximal minor leads with its
// diagonal monomial with coefficient +1.
DiagonalCheck diagonal_leading_check(const LadderShape& shape, const Caps& caps = {});

// Dimension of the span of all degree-d products of generators (minor times
// copy marker), by exact fraction-free row reduction. Tiny instances only;
// throws CapExceeded past the product budget.
long long fiber_hilbert_direct(const LadderShape& shape, int r, int d,
                               const Caps& caps = {});

// Exact rank of an integer matrix by Bareiss one-step elimination; rows are
// consumed in place.
long long bareiss_rank(std::vector<std::vector<BigInt>>& matrix);

}  // namespace ladder
