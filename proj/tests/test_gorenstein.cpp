#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ladder/gorenstein.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ladder;

TEST_CASE("connected pairwise form on the worked shapes") {
  CHECK(is_gorenstein_connected(fixtures::wide_gorenstein()).verdict);

  GorensteinReport small = is_gorenstein_connected(fixtures::small_non_gorenstein());
  CHECK_FALSE(small.verdict);
  REQUIRE(!small.witnesses.empty());
  CHECK(small.witnesses[0].kind == "u-pair");
  CHECK(small.witnesses[0].indices == std::vector<int>{1, 2});

  CHECK(is_gorenstein_connected(fixtures::single_row()).verdict);  // vacuous
  CHECK_THROWS_AS(is_gorenstein_connected(fixtures::two_block()), std::invalid_argument);
}

TEST_CASE("local gap form on the worked shapes") {
  CHECK(is_gorenstein_local(fixtures::wide_gorenstein()).verdict);
  GorensteinReport small = is_gorenstein_local(fixtures::small_non_gorenstein());
  CHECK_FALSE(small.verdict);
  CHECK(small.witnesses[0].kind == "eps-run");
  CHECK(is_gorenstein_local(fixtures::generic_2x4()).verdict);  // unit interior gaps
  CHECK_THROWS_AS(is_gorenstein_local(fixtures::two_block()), std::invalid_argument);
}

TEST_CASE("local and pairwise forms agree on every connected shape, exhaustively") {
  std::size_t connected = 0, disagreements = 0;
  for (const LadderShape& shape : oracles::all_normalized_shapes(4, 9)) {
    if (blocks(shape).cuts.size() != 1) continue;
    ++connected;
    if (is_gorenstein_local(shape).verdict != is_gorenstein_connected(shape).verdict)
      ++disagreements;
  }
  CHECK(disagreements == 0);
  CHECK(connected > 500);
}

TEST_CASE("block form on the worked shapes") {
  GorensteinReport two_block = is_gorenstein_L(fixtures::two_block());
  CHECK_FALSE(two_block.verdict);
  bool saw_pair = false;
  for (const Witness& w : two_block.witnesses)
    if (w.kind == "u-pair" && w.indices == std::vector<int>{1, 3}) saw_pair = true;
  CHECK(saw_pair);  // u_3 - u_1 = 3, expected 4

  CHECK(is_gorenstein_L(fixtures::wide_gorenstein()).verdict);
  CHECK(is_gorenstein_L(fixtures::generic_2x4()).verdict);
}

TEST_CASE("two identical disjoint blocks balance automatically") {
  // two copies of the 2x3 generic block, far apart: both blocks carry the
  // same chain data, so only the pairwise conditions matter
  LadderShape stacked({{1, 3}, {2, 4}, {5, 7}, {6, 8}});
  BlockDecomposition dec = blocks(stacked);
  REQUIRE(dec.blocks.size() == 2);
  GorensteinReport rep = is_gorenstein_L(stacked);
  for (const Witness& w : rep.witnesses) CHECK(w.kind != "block-rank");
}

TEST_CASE("module form: generic shapes are Gorenstein exactly at r = m") {
  for (int r = 2; r <= 5; ++r)
    CHECK(is_gorenstein_M(fixtures::generic_2x4(), r).verdict == (r == 4));
  for (int r = 2; r <= 6; ++r)
    CHECK(is_gorenstein_M(fixtures::generic_3x5(), r).verdict == (r == 5));
}

TEST_CASE("module form on the wide shape peaks at the block data") {
  // delta_1 + i_1 - p_1 + 1 = 7 + 1 - 1 + 1 = 8
  for (int r = 2; r <= 10; ++r)
    CHECK(is_gorenstein_M(fixtures::wide_gorenstein(), r).verdict == (r == 8));
}

TEST_CASE("module form routes r = 1 to the block form") {
  GorensteinReport rep = is_gorenstein_M(fixtures::generic_2x4(), 1);
  CHECK(rep.verdict);
  CHECK(rep.method == GorMethod::BlockForm);
  CHECK_THROWS_AS(is_gorenstein_M(fixtures::generic_2x4(), 0), std::invalid_argument);
}

TEST_CASE("purity oracle on the worked shapes") {
  PurityOracleResult small = purity_oracle(fixtures::small_non_gorenstein(), 1);
  CHECK_FALSE(small.gorenstein);
  REQUIRE(small.detail.witness.has_value());
  CHECK(small.detail.witness->first.size() - 1 == 2);
  CHECK(small.detail.witness->second.size() - 1 == 3);

  CHECK(purity_oracle(fixtures::wide_gorenstein(), 1).gorenstein);
  CHECK(purity_oracle(fixtures::wide_gorenstein(), 8).gorenstein);
  CHECK_FALSE(purity_oracle(fixtures::wide_gorenstein(), 9).gorenstein);
}

TEST_CASE("h-vector oracle on the worked shapes") {
  CHECK(hvector_oracle(fixtures::generic_2x4(), 1));
  CHECK_FALSE(hvector_oracle(fixtures::small_non_gorenstein(), 1));
  CHECK(hvector_oracle(fixtures::chain_shape(), 1));
}

TEST_CASE("witnesses are sound") {
  for (const LadderShape& shape : oracles::random_normalized_shapes(80, 107)) {
    for (int r : {1, 2, 3}) {
      GorensteinReport rep = is_gorenstein_M(shape, r);
      CHECK(rep.verdict == rep.witnesses.empty());
      GapProfile g = gaps(shape);
      for (const Witness& w : rep.witnesses) {
        if (w.kind == "u-pair") {
          const int i = w.indices[0], k = w.indices[1];
          CHECK(g.epsilon_at(i).greater_than(1));
          CHECK(g.epsilon_at(k).greater_than(1));
          CHECK(shape.u(k) - shape.u(i) != 2 * (k - i));
        } else if (w.kind == "v-pair") {
          const int i = w.indices[0], k = w.indices[1];
          CHECK(g.theta_at(i - 1).greater_than(1));
          CHECK(g.theta_at(k - 1).greater_than(1));
          CHECK(shape.v(k) - shape.v(i) != 2 * (k - i));
        } else if (w.kind == "copy-count") {
          BlockDecomposition dec = blocks(shape);
          const Block& b = dec.blocks[w.indices[0] - 1];
          CHECK(r != g.delta[b.p - 1] + b.i_min - b.p + 1);
        }
      }
    }
  }
}

TEST_CASE("fast criteria equal the purity oracle, exhaustive over small shapes") {
  std::size_t disagreements = 0;
  for (const LadderShape& shape : oracles::all_normalized_shapes(4, 9))
    for (int r = 1; r <= 4; ++r)
      if (is_gorenstein_M(shape, r).verdict != purity_oracle(shape, r).gorenstein)
        ++disagreements;
  CHECK(disagreements == 0);
}

TEST_CASE("fast criteria equal the h-vector oracle on bounded instances") {
  std::size_t disagreements = 0, tested = 0;
  for (const LadderShape& shape : oracles::all_normalized_shapes(4, 9)) {
    for (int r = 1; r <= 2; ++r) {
      if (count_lattice(shape) * r > 150) continue;
      ++tested;
      if (is_gorenstein_M(shape, r).verdict != hvector_oracle(shape, r)) ++disagreements;
    }
  }
  CHECK(disagreements == 0);
  CHECK(tested > 2000);
}

TEST_CASE("the module form matches the r = 1 form plus the rank condition") {
  for (const LadderShape& shape : oracles::random_normalized_shapes(60, 109)) {
    const bool base = is_gorenstein_L(shape).verdict;
    const int rank = poset_rank(FinitePoset(shape, 1));
    for (int r = 2; r <= 4; ++r)
      CHECK(is_gorenstein_M(shape, r).verdict == (base && rank == r - 2));
  }
}

TEST_CASE("decide_gorenstein cross-checks the oracles") {
  OracleSet all;
  all.purity = all.hvector = all.joinirr = all.direct_hilbert = true;

  GorensteinReport small = decide_gorenstein(fixtures::small_non_gorenstein(), 1, all);
  CHECK_FALSE(small.verdict);
  CHECK(small.consistent);
  CHECK(small.oracle_purity == false);
  CHECK(small.oracle_hvector == false);
  CHECK(small.oracle_joinirr == true);
  CHECK(small.oracle_direct_hilbert == true);
  CHECK_FALSE(small.f_regular);

  OracleSet purity_only;
  purity_only.purity = true;
  GorensteinReport wide = decide_gorenstein(fixtures::wide_gorenstein(), 1, purity_only);
  CHECK(wide.verdict);
  CHECK(wide.consistent);
  CHECK(wide.f_regular);
}
