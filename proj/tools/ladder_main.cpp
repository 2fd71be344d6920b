#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ladder/run.hpp"

// Command line front end; all real work happens in ladder::run so the same
// paths are exercised in-process by the tests.
int main(int argc, char** argv) {
  CLI::App app{"ladder matrices: lattices of maximal-minor column tuples, "
               "join-irreducible posets, and Gorenstein decisions for the special fiber"};
  app.require_subcommand(1);

  ladder::RunConfig config;
  std::string manifest;

  auto add_common = [&](CLI::App* sub, bool takes_shape) {
    if (takes_shape) {
      sub->add_option("--shape", config.shape_text, "inline shape, e.g. \"1-5,4-6\"");
      sub->add_option("--file", config.shape_file,
                      "JSON shape file {\"intervals\": [[u,v],...], \"r\": k}");
    }
    sub->add_option("--r", config.r, "number of copies (default 1)")->check(CLI::PositiveNumber);
    sub->add_option("--oracles", config.oracles,
                    "cross-checks: purity, hvector, joinirr, direct-hilbert, none")
        ->delimiter(',');
    sub->add_option("--format", config.format, "text | structured | dot");
    sub->add_option("--max-lattice", config.caps.max_lattice, "lattice materialization cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-chains", config.caps.max_chains, "maximal-chain enumeration cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-det-n", config.caps.max_det_rows, "symbolic determinant row bound")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--strict", config.strict, "reject non-normalized shapes instead of repairing");
  };

  const std::vector<std::string> subcommands = {
      "validate", "normalize", "lattice",   "poset", "gorenstein",
      "invariants", "hvector",  "relations", "minors", "all"};
  for (const std::string& name : subcommands) add_common(app.add_subcommand(name), true);
  CLI::App* batch = app.add_subcommand("batch", "run a manifest of shapes");
  batch->add_option("--file", manifest, "JSON manifest: array of shape entries")->required();
  add_common(batch, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // parse failures map to the input-error status
  }

  config.oracles_given = !config.oracles.empty();
  CLI::App* picked = app.get_subcommands().front();
  ladder::RunResult result = picked->get_name() == "batch"
                                 ? ladder::run_batch(manifest, config)
                                 : ladder::run(picked->get_name(), config);
  std::fputs(result.output.c_str(), stdout);
  return result.status;
}
