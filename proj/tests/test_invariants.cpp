#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ladder/invariants.hpp"
#include "ladder/lattice.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ladder;

TEST_CASE("invariants of the small non-Gorenstein shape") {
  InvariantReport rep = invariants(fixtures::small_non_gorenstein(), 1);
  CHECK(rep.p_size == 6);
  CHECK(rep.rank == 3);
  CHECK(rep.reg == 2);
  CHECK(rep.reduction_number == 2);
  CHECK(rep.dim == 7);
  CHECK(rep.a_invariant == -5);
  CHECK_FALSE(rep.gorenstein);
  CHECK_FALSE(rep.closed_forms.has_value());
}

TEST_CASE("invariants of the wide Gorenstein shape") {
  InvariantReport rep = invariants(fixtures::wide_gorenstein(), 1);
  CHECK(rep.p_size == 30);
  CHECK(rep.rank == 6);
  CHECK(rep.reg == 23);
  CHECK(rep.dim == 31);
  CHECK(rep.a_invariant == -8);
  CHECK(rep.gorenstein);
  REQUIRE(rep.closed_forms.has_value());
  CHECK(rep.closed_forms->reg == 23);
  CHECK(rep.closed_forms->a_invariant == -8);
}

TEST_CASE("a Gorenstein module case has a-invariant -r") {
  InvariantReport rep = invariants(fixtures::generic_2x4(), 4);
  CHECK(rep.gorenstein);
  REQUIRE(rep.closed_forms.has_value());
  CHECK(rep.closed_forms->a_invariant == -4);
  CHECK(rep.a_invariant == -4);
  CHECK(rep.reg == 4);  // sum of deltas
}

TEST_CASE("fiber dimension formula") {
  CHECK(fiber_dimension(fixtures::small_non_gorenstein(), 1) == 7);
  CHECK(fiber_dimension(fixtures::generic_2x4(), 1) == 5);
  CHECK(fiber_dimension(fixtures::wide_gorenstein(), 1) == 31);
  for (const LadderShape& shape : oracles::random_normalized_shapes(20, 113))
    for (int r = 1; r <= 4; ++r)
      CHECK(fiber_dimension(shape, r) == gaps(shape).delta_sum() + r);
}

TEST_CASE("identities tie the poset data to the Hilbert series") {
  for (const LadderShape& shape : oracles::random_normalized_shapes(25, 127)) {
    for (int r = 1; r <= 2; ++r) {
      InvariantReport rep = invariants(shape, r);
      HVector h = h_vector(shape, r);
      CHECK(rep.reg == rep.p_size - rep.rank - 1);
      CHECK(rep.reg == h.degree());
      CHECK(rep.dim == rep.p_size + 1);
      CHECK(rep.dim == h.dim);
      CHECK(rep.a_invariant == rep.reg - rep.dim);
      CHECK(rep.a_invariant == h.degree() - h.dim);
      if (rep.gorenstein) {
        REQUIRE(rep.closed_forms.has_value());
        CHECK(rep.closed_forms->reg == rep.reg);
        CHECK(rep.closed_forms->a_invariant == rep.a_invariant);
      } else {
        CHECK_FALSE(rep.closed_forms.has_value());
      }
    }
  }
}
