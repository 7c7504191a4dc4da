#include <iostream>

#include <CLI11.hpp>

#include "checks.hpp"
#include "pipeline.hpp"

namespace {

void add_group_options(CLI::App* cmd, ekr::cli::RunConfig& c) {
  cmd->add_option("--family", c.family, "psl, pgl, sp, psu3, sym or alt");
  cmd->add_option("--n", c.n, "dimension (psl, pgl), rank n of Sp_2n(2), or degree (sym, alt)");
  cmd->add_option("--q", c.q, "field size");
  cmd->add_option("--action", c.action, "sp only: plus or minus quadratic forms");
  cmd->add_option("--file", c.file, "generator file");
  cmd->add_option("--cap", c.cap, "enumeration cap (elements)");
  cmd->add_option("--budget", c.budget, "search budget (node expansions)");
  cmd->add_option("--max-order", c.max_order, "largest |G| for the exact coclique search");
  cmd->add_option("--report", c.report, "write the JSON report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral EKR bounds for 2-transitive permutation groups"};
  app.require_subcommand(1);
  ekr::cli::RunConfig config;
  std::string scope;

  auto* analyze = app.add_subcommand("analyze", "spectrum, bounds and verdict for one group");
  add_group_options(analyze, config);
  analyze->add_option("--chartab", config.chartab, "character table file");
  analyze->add_option("--weights", config.weights, "unit, search, scheme, C1,C2 or C1=a,C2=b");
  analyze->add_flag("--clique", config.clique, "search for a sharply transitive set");

  auto* brute = app.add_subcommand("brute", "exact maximum intersecting set and its classification");
  add_group_options(brute, config);

  auto* verify = app.add_subcommand("verify-paper", "closed-form and desk-scale checks, one line per check");
  verify->add_option("--scope", scope, "small-sporadics, suzuki, ree, psu3, psl, symplectic or all-desk")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ekr::cli::kError;
  }

  try {
    if (*analyze) return ekr::cli::cmd_analyze(config, std::cout);
    if (*brute) return ekr::cli::cmd_brute(config, std::cout);
    return ekr::cli::cmd_verify(scope, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ekr::cli::kError;
  }
}
