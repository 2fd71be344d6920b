#pragma once

#include <optional>

#include "ladder/config.hpp"
#include "ladder/gorenstein.hpp"
#include "ladder/shape.hpp"

namespace ladder {

// Gorenstein-case closed forms; always equal to the general values when they
// apply.
struct ClosedForms {
  long long reg = 0;
  long long a_invariant = 0;
};

struct InvariantReport {
  long long p_size = 0;            // join-irreducible count
  int rank = 0;                    // longest chain length in the poset
  long long reg = 0;               // |P| - rank - 1
  long long reduction_number = 0;  // equals reg
  long long dim = 0;               // Krull dimension = analytic spread = |P| + 1
  long long a_invariant = 0;       // reg - dim
  bool gorenstein = false;
  std::optional<ClosedForms> closed_forms;  // present exactly when gorenstein
};

InvariantReport invariants(const LadderShape& shape, int r, const Caps& caps = {});

// sum of deltas + r, checked against |P| + 1
long long fiber_dimension(const LadderShape& shape, int r);

}  // namespace ladder
