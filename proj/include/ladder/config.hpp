#pragma once

#include <cstddef>

namespace ladder {

// Resource limits shared across the modules. Every cap is overridable from
// the CLI; the defaults keep interactive runs desk-scale.
struct Caps {
  // largest lattice that enumeration-based operations will materialize
  std::size_t max_lattice = 200000;
  // below this size the <= relation is stored as a bit matrix, above it the
  // relation is recomputed on the fly
  std::size_t max_bitmatrix = 20000;
  // maximal-chain enumeration limit before falling back to the path DP
  std::size_t max_chains = 1000000;
  // largest row count for symbolic determinants
  int max_det_rows = 8;
  // product count budget for the direct Hilbert-function computation
  std::size_t direct_budget = 20000;
};

}  // namespace ladder
