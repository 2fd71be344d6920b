#pragma once

#include <string>
#include <vector>

#include "ladder/config.hpp"
#include "ladder/gorenstein.hpp"

namespace ladder {

// Everything a CLI invocation needs; the binary is a thin flag parser over
// this.
struct RunConfig {
  std::string shape_text;  // inline "u-v,..." string
  std::string shape_file;  // or a JSON file {"intervals": [[u,v],...], "r": k}
  int r = 0;               // 0: unset, resolved against the file and default 1
  std::vector<std::string> oracles;  // purity, hvector, joinirr, direct-hilbert, none
  bool oracles_given = false;        // distinguishes an explicit empty list
  Caps caps;
  std::string format = "text";  // text | structured | dot
  bool strict = false;          // reject non-normalized shapes instead of repairing
};

// exit statuses: 0 ok, 1 internal error, 2 parse/validation failure,
// 3 cap exceeded, 4 fast path and oracle disagree
struct RunResult {
  int status = 0;
  std::string output;
};

// subcommand is one of: validate, normalize, lattice, poset, gorenstein,
// invariants, hvector, relations, minors, all
RunResult run(const std::string& subcommand, const RunConfig& config);

// manifest: JSON array of entries, each a shape string or an object with
// "intervals"/"shape" and optional "r"
RunResult run_batch(const std::string& manifest_path, const RunConfig& config);

}  // namespace ladder
