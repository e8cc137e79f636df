#include <CLI11.hpp>

#include <iostream>

#include "pnr/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerical ranges of periodic tridiagonal operators"};
  app.require_subcommand(1);

  pnr::cli::RangeOptions range;
  auto* range_cmd = app.add_subcommand("range", "Write the closure of W(T) as a CSV polygon");
  range_cmd->add_option("--spec", range.spec, "Period data, e.g. \"p=2;a=0,1;b=0,0;c=1,1\" or \"word=01\"");
  range_cmd->add_option("--word", range.word, "Period word for T(a,0,1), e.g. 01");
  range_cmd->add_option("--mode", range.mode, "symbol-hull or truncation")->capture_default_str();
  range_cmd->add_option("--k", range.k, "Truncation size")->capture_default_str();
  range_cmd->add_option("--num-theta", range.cfg.num_theta, "Rotation angles")->capture_default_str();
  range_cmd->add_option("--num-phi", range.cfg.num_phi, "Symbol parameter samples")->capture_default_str();
  range_cmd->add_option("--refine-tol", range.cfg.refine_tol, "Adaptive sweep tolerance (0 = off)");
  range_cmd->add_option("--out", range.out, "Output CSV (stdout if omitted)");

  pnr::cli::VerifyOptions verify;
  std::size_t n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks and write JSON-lines reports");
  verify_cmd->add_option("--profile", verify.profile, "quick or full")->capture_default_str();
  verify_cmd->add_option("--filter", verify.filter, "Substring of check names");
  auto* n_opt = verify_cmd->add_option("--n", n, "Restrict to conjecture checks for this n");
  verify_cmd->add_option("--out", verify.out, "Output file (stdout if omitted)");
  verify_cmd->add_option("--seed", verify.seed, "Seed for random specs")->capture_default_str();

  pnr::cli::FigureOptions figure;
  auto* figure_cmd = app.add_subcommand("figure", "Write an SVG of the conjecture setting for n = 1..3");
  figure_cmd->add_option("--n", figure.n, "Period word 0^n 1")->required();
  figure_cmd->add_option("--out", figure.out, "Output SVG (stdout if omitted)");
  figure_cmd->add_option("--k", figure.k, "Truncation size for the sample points")->capture_default_str();
  figure_cmd->add_option("--num-theta", figure.cfg.num_theta, "Rotation angles")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pnr::cli::kUsageError;
  }

  if (*range_cmd) return pnr::cli::cmd_range(range, std::cout, std::cerr);
  if (*verify_cmd) {
    if (*n_opt) verify.n = n;
    return pnr::cli::cmd_verify(verify, std::cout, std::cerr);
  }
  if (*figure_cmd) return pnr::cli::cmd_figure(figure, std::cout, std::cerr);
  return pnr::cli::kUsageError;
}
