#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ladder/config.hpp"
#include "ladder/poset.hpp"
#include "ladder/shape.hpp"

namespace ladder {

enum class GorMethod { ConnectedPairwise, LocalGaps, BlockForm, ModuleForm };
std::string to_text(GorMethod m);

// A violated condition, with enough indices to recheck it by hand.
struct Witness {
  std::string kind;          // "u-pair", "v-pair", "eps-run", "theta-run", "block-rank", "copy-count"
  std::vector<int> indices;
  std::string detail;
};

struct GorensteinReport {
  bool verdict = false;
  GorMethod method = GorMethod::BlockForm;
  std::vector<Witness> witnesses;  // nonempty exactly when verdict is false

  // oracle verdicts, filled only when the oracle ran
  std::optional<bool> oracle_purity;
  std::optional<bool> oracle_hvector;
  std::optional<bool> oracle_joinirr;        // structural cross-check passed
  std::optional<bool> oracle_direct_hilbert; // symbolic cross-check passed
  std::optional<PurityResult> purity_detail;

  // false when any enabled oracle contradicts the verdict; such a run fails
  bool consistent = true;
  // Gorenstein special fibers here are F-regular; reported informationally
  bool f_regular = false;
};

// Pairwise form for a connected shape (single block), r = 1: the start gaps
// over rows with eps > 1 and the end gaps over rows with theta > 1 must both
// advance by exactly 2 per row step. Throws on disconnected shapes.
GorensteinReport is_gorenstein_connected(const LadderShape& shape);

// Equivalent local form: each gap > 1 must be followed (resp. preceded) by a
// run of unit gaps of exactly the right length. Throws on disconnected
// shapes.
GorensteinReport is_gorenstein_local(const LadderShape& shape);

// General r = 1 form: the pairwise conditions per block, plus equal
// chain-length data across blocks.
GorensteinReport is_gorenstein_L(const LadderShape& shape);

// r >= 2 form: pairwise conditions per block plus the copy-count equation
// r = delta_{p_s} + i_s - p_s + 1 in every block. r = 1 routes to the r = 1
// form.
GorensteinReport is_gorenstein_M(const LadderShape& shape, int r);

struct PurityOracleResult {
  bool gorenstein = false;
  PurityResult detail;
};

// Ground truth: the fiber is Gorenstein iff every maximal chain of the
// join-irreducible poset has the same length.
PurityOracleResult purity_oracle(const LadderShape& shape, int r,
                                 std::size_t chain_cap = Caps{}.max_chains);

// Ground truth via the Hilbert series: Gorenstein iff the h-vector is
// palindromic (the fiber is a Cohen-Macaulay domain).
bool hvector_oracle(const LadderShape& shape, int r, const Caps& caps = {});

struct OracleSet {
  bool purity = false;
  bool hvector = false;
  bool joinirr = false;
  bool direct_hilbert = false;
};

// Runs the criterion for (shape, r), then every enabled oracle; a
// disagreement marks the report inconsistent.
GorensteinReport decide_gorenstein(const LadderShape& shape, int r,
                                   const OracleSet& oracles = {}, const Caps& caps = {});

}  // namespace ladder
