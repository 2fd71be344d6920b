#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "ladder/errors.hpp"
#include "ladder/poset.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ladder;

TEST_CASE("join-irreducibles of the worked shapes") {
  FinitePoset two_block(fixtures::two_block(), 1);
  CHECK(two_block.size() == 17);
  CHECK(two_block.covers().size() == 21);

  FinitePoset small(fixtures::small_non_gorenstein(), 1);
  CHECK(small.size() == 6);
  CHECK(small.covers().size() == 6);
  CHECK(small.elements() ==
        std::vector<JoinIrr>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 6}});

  // the copy chain contributes r - 1 extra elements in a path
  FinitePoset with_copies(fixtures::small_non_gorenstein(), 3);
  CHECK(with_copies.size() == 8);
  CHECK(with_copies.index_of({3, 2}) >= 0);
  CHECK(with_copies.index_of({3, 3}) >= 0);
}

TEST_CASE("element count is the delta sum plus r - 1") {
  for (const LadderShape& shape : oracles::random_normalized_shapes(40, 61)) {
    GapProfile g = gaps(shape);
    for (int r = 1; r <= 4; ++r)
      CHECK(static_cast<long long>(FinitePoset(shape, r).size()) == g.delta_sum() + r - 1);
  }
}

TEST_CASE("expansion lands on the expected lattice points") {
  LadderShape small = fixtures::small_non_gorenstein();
  CHECK(expand({1, 2}, small, 1) == FiberPoint{{2, 4}, 1});
  CHECK(expand({2, 5}, small, 1) == FiberPoint{{1, 5}, 1});
  CHECK(expand({3, 5}, fixtures::two_block(), 1) == FiberPoint{{1, 3, 5, 9, 10}, 1});
  CHECK(expand({3, 2}, small, 2) == FiberPoint{{1, 4}, 2});
  CHECK_THROWS_AS(expand({1, 1}, small, 1), std::invalid_argument);  // col = u_1
  CHECK_THROWS_AS(expand({3, 2}, small, 1), std::invalid_argument);  // needs r >= 2
}

TEST_CASE("comparability formula") {
  CHECK(ji_leq({2, 5}, {1, 4}));        // k-i = 1, l-j = 1
  CHECK_FALSE(ji_leq({2, 4}, {1, 2}));  // l-j = 2 > 1
  CHECK(ji_leq({1, 3}, {1, 3}));        // reflexive
  CHECK(ji_leq({2, 5}, {1, 5}));
  CHECK_FALSE(ji_leq({1, 4}, {2, 5}));
}

TEST_CASE("comparability matches expansion on random shapes") {
  for (const LadderShape& shape : oracles::random_normalized_shapes(25, 67)) {
    for (int r : {1, 3}) {
      FinitePoset poset(shape, r);
      for (std::size_t a = 0; a < poset.size(); ++a)
        for (std::size_t b = 0; b < poset.size(); ++b)
          CHECK(poset.leq(static_cast<int>(a), static_cast<int>(b)) ==
                fiber_leq(expand(poset.at(a), shape, r), expand(poset.at(b), shape, r)));
    }
  }
}

TEST_CASE("cover rules on the small shape") {
  FinitePoset p(fixtures::small_non_gorenstein(), 1);
  std::set<std::pair<int, int>> got(p.covers().begin(), p.covers().end());
  auto edge = [&p](JoinIrr lo, JoinIrr hi) {
    return std::pair<int, int>{p.index_of(lo), p.index_of(hi)};
  };
  std::set<std::pair<int, int>> expected{
      edge({1, 2}, {1, 3}), edge({1, 3}, {1, 4}), edge({1, 4}, {1, 5}),
      edge({2, 5}, {2, 6}), edge({2, 5}, {1, 4}), edge({2, 6}, {1, 5})};
  CHECK(got == expected);
}

TEST_CASE("transitive closure of covers equals the comparability formula") {
  for (const LadderShape& shape : oracles::random_normalized_shapes(20, 71)) {
    for (int r : {1, 2}) {
      FinitePoset poset(shape, r);
      const std::size_t sz = poset.size();
      // reachability over covers
      std::vector<std::vector<bool>> reach(sz, std::vector<bool>(sz, false));
      for (std::size_t i = 0; i < sz; ++i) reach[i][i] = true;
      std::vector<std::vector<int>> up(sz);
      for (auto [lo, hi] : poset.covers()) up[lo].push_back(hi);
      // simple fixed point
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t a = 0; a < sz; ++a)
          for (int b : up[a])
            for (std::size_t c = 0; c < sz; ++c)
              if (reach[c][a] && !reach[c][b]) {
                reach[c][b] = true;
                changed = true;
              }
      }
      for (std::size_t a = 0; a < sz; ++a)
        for (std::size_t b = 0; b < sz; ++b)
          CHECK(reach[a][b] == poset.leq(static_cast<int>(a), static_cast<int>(b)));
    }
  }
}

TEST_CASE("minimal and maximal elements of the worked shapes") {
  CHECK(minimals(fixtures::two_block(), 1) ==
        std::vector<JoinIrr>{{1, 2}, {3, 5}, {5, 11}});
  CHECK(maximals(fixtures::two_block(), 1) ==
        std::vector<JoinIrr>{{1, 5}, {2, 7}, {4, 11}, {5, 13}});

  CHECK(minimals(fixtures::small_non_gorenstein(), 1) ==
        std::vector<JoinIrr>{{1, 2}, {2, 5}});
  CHECK(maximals(fixtures::small_non_gorenstein(), 1) == std::vector<JoinIrr>{{1, 5}});

  CHECK(minimals(fixtures::wide_gorenstein(), 1) ==
        std::vector<JoinIrr>{{1, 2}, {3, 6}, {4, 8}, {5, 10}});

  // r >= 2 adds the ends of the copy chain
  CHECK(minimals(fixtures::small_non_gorenstein(), 3).back() == JoinIrr{3, 2});
  CHECK(maximals(fixtures::small_non_gorenstein(), 3).back() == JoinIrr{3, 3});
}

TEST_CASE("components match the cut count") {
  CHECK(components(fixtures::two_block(), 1).count == 2);
  CHECK(components(fixtures::two_block(), 2).count == 3);
  CHECK(components(fixtures::wide_gorenstein(), 1).count == 1);
  CHECK(components(fixtures::small_non_gorenstein(), 1).count == 1);
  for (const LadderShape& shape : oracles::random_normalized_shapes(25, 73)) {
    const int cuts = static_cast<int>(blocks(shape).cuts.size());
    for (int r = 1; r <= 3; ++r)
      CHECK(components(shape, r).count == (r == 1 ? cuts : cuts + 1));
  }
}

TEST_CASE("chain length formula") {
  CHECK(chain_length({1, 3}, {1, 3}) == 0);
  CHECK(chain_length({1, 3}, {1, 2}) == 1);   // cover
  CHECK(chain_length({1, 5}, {2, 5}) == 2);
  CHECK_THROWS_AS(chain_length({2, 5}, {1, 5}), std::invalid_argument);
}

TEST_CASE("every saturated chain between comparable elements has the formula length") {
  for (const LadderShape& shape : oracles::random_normalized_shapes(12, 79)) {
    FinitePoset poset(shape, 1);
    for (std::size_t b = 0; b < poset.size(); ++b)
      for (std::size_t t = 0; t < poset.size(); ++t) {
        if (b == t || !poset.leq(static_cast<int>(b), static_cast<int>(t))) continue;
        std::vector<int> lengths =
            oracles::saturated_chain_lengths(poset, static_cast<int>(b), static_cast<int>(t));
        REQUIRE(!lengths.empty());
        const int expected = chain_length(poset.at(t), poset.at(b));
        for (int len : lengths) CHECK(len == expected);
      }
  }
}

TEST_CASE("maximal chains of the small shape") {
  FinitePoset p(fixtures::small_non_gorenstein(), 1);
  std::vector<Chain> chains = maximal_chains(p);
  CHECK(chains.size() == 3);
  CHECK(count_maximal_chains(p) == 3);
  std::multiset<std::size_t> lengths;
  for (const Chain& c : chains) lengths.insert(c.size() - 1);
  CHECK(lengths == std::multiset<std::size_t>{2, 2, 3});

  PurityResult pur = purity(p);
  CHECK_FALSE(pur.pure);
  CHECK(pur.rank == 3);
  CHECK(pur.shortest == 2);
  REQUIRE(pur.witness.has_value());
  CHECK(pur.witness->first.size() - 1 == 2);
  CHECK(pur.witness->second.size() - 1 == 3);
}

TEST_CASE("purity of the wide shape") {
  FinitePoset p(fixtures::wide_gorenstein(), 1);
  PurityResult pur = purity(p);
  CHECK(pur.pure);
  CHECK(pur.rank == 6);
  CHECK(count_maximal_chains(p) == 58);
}

TEST_CASE("single chain posets are pure with rank |P| - 1") {
  FinitePoset p(fixtures::chain_shape(), 1);
  PurityResult pur = purity(p);
  CHECK(pur.pure);
  CHECK(pur.rank == static_cast<int>(p.size()) - 1);
}

TEST_CASE("chain-cap fallback decides purity without enumeration") {
  for (const LadderShape& shape : oracles::random_normalized_shapes(20, 83)) {
    for (int r : {1, 2}) {
      FinitePoset poset(shape, r);
      PurityResult by_chains = purity(poset, Caps{}.max_chains);
      PurityResult by_paths = purity(poset, 0);  // force the DP fallback
      CHECK(by_chains.via_enumeration);
      CHECK_FALSE(by_paths.via_enumeration);
      CHECK(by_chains.pure == by_paths.pure);
      CHECK(by_chains.rank == by_paths.rank);
      CHECK(by_chains.shortest == by_paths.shortest);
      if (!by_paths.pure) {
        REQUIRE(by_paths.witness.has_value());
        // the DP witness chains are genuine maximal chains of those lengths
        CHECK(by_paths.witness->first.size() == by_chains.witness->first.size());
        CHECK(by_paths.witness->second.size() == by_chains.witness->second.size());
      }
    }
  }
}

TEST_CASE("brute force agrees with the construction, with the order, exhaustively") {
  CHECK(join_irreducibles_oracle(fixtures::small_non_gorenstein(), 1).size() == 6);
  // every shape with n <= 4, m <= 9, every r <= 4; mismatches aggregated so
  // the pass stays cheap
  std::size_t mismatches = 0;
  for (const LadderShape& shape : oracles::all_normalized_shapes(4, 9)) {
    for (int r = 1; r <= 4; ++r) {
      FinitePoset poset(shape, r);
      std::vector<FiberPoint> brute = join_irreducibles_oracle(shape, r);
      std::vector<FiberPoint> expanded;
      for (const JoinIrr& e : poset.elements()) expanded.push_back(expand(e, shape, r));
      std::vector<FiberPoint> sorted = expanded;
      std::sort(sorted.begin(), sorted.end(), [](const FiberPoint& a, const FiberPoint& b) {
        return a.tuple != b.tuple ? a.tuple < b.tuple : a.copy < b.copy;
      });
      if (sorted != brute) ++mismatches;
      for (std::size_t a = 0; a < poset.size(); ++a)
        for (std::size_t b = 0; b < poset.size(); ++b)
          if (poset.leq(static_cast<int>(a), static_cast<int>(b)) !=
              fiber_leq(expanded[a], expanded[b]))
            ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("in a chain lattice every non-bottom element is join-irreducible") {
  std::vector<FiberPoint> brute = join_irreducibles_oracle(fixtures::chain_shape(), 1);
  CHECK(brute.size() == 2);  // three elements, minus the bottom
}

TEST_CASE("generic 2x4 with two copies has five join-irreducibles") {
  CHECK(join_irreducibles_oracle(fixtures::generic_2x4(), 2).size() == 5);
}

TEST_CASE("dot export matches the golden file") {
  FinitePoset p(fixtures::two_block(), 1);
  std::ifstream golden(std::string(LADDER_TEST_DIR) + "/golden/two_block_poset.dot");
  REQUIRE(golden.good());
  std::stringstream want;
  want << golden.rdbuf();
  CHECK(to_dot(p) == want.str());
}

TEST_CASE("dot export of the small and empty posets") {
  FinitePoset p(fixtures::small_non_gorenstein(), 1);
  std::string dot = to_dot(p);
  CHECK(dot.find("a_1_2 [label=\"a[1,2]\"]") != std::string::npos);
  CHECK(dot.find("a_2_5 -> a_1_4;") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1))
    ++edges;
  CHECK(edges == 6);

  FinitePoset empty(LadderShape(), 1);
  CHECK(to_dot(empty) == "digraph poset {\n}\n");
}

TEST_CASE("grid layout mirrors the shape") {
  FinitePoset p(fixtures::two_block(), 1);
  std::string grid = to_grid(p, fixtures::two_block());
  std::istringstream lines(grid);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 5);
  // row 1 starts with a zero at the (1, u_1) spot and then the entries
  CHECK(rows[0].find("a[1,2]") != std::string::npos);
  CHECK(rows[0].substr(0, 1) == "0");
  CHECK(rows[3].find("a[4,10]") != std::string::npos);
  CHECK(rows[3].find("a[4,9]") == std::string::npos);  // (4, u_4) stays zero

  std::string with_copies = to_grid(FinitePoset(fixtures::small_non_gorenstein(), 3),
                                    fixtures::small_non_gorenstein());
  CHECK(with_copies.find("chain: a[3,2] < a[3,3]") != std::string::npos);
}
