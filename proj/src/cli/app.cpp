#include <fmt/format.h>
#include <iostream>

#include "CLI11.hpp"
#include "uniqlab/cli.hpp"

namespace uniqlab::cli {

namespace {

const char* describe(const std::string& name) {
  if (name == "region") return "Region A membership grid (region.csv, region.svg)";
  if (name == "recursion") return "Exponent recursion trace toward (L1, L2)";
  if (name == "bounds") return "Derivative-zero intervals, gap bounds and decay certificates";
  if (name == "moments") return "Gamma-moment identity and the G/H moment cascade";
  if (name == "sharpness") return "Adversarial derivative-zero sequences and gap ratios";
  if (name == "sweep") return "Empirical sigma_min of sampling operators over the (alpha, beta) grid";
  return "Least-squares recovery of an in-span witness";
}

}  // namespace

int main_entry(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"uniq-lab: Fourier uniqueness-pair laboratory"};
  app.set_config("--config", "", "Flat key=value file; keys are long option names without dashes");
  app.require_subcommand(1, 1);

  app.add_option("--alpha", config.alpha, "Direct-side node exponent in (0,1)")->capture_default_str();
  app.add_option("--beta", config.beta, "Transform-side node exponent in (0,1)")->capture_default_str();
  app.add_option("--grid", config.grid, "Grid cells per axis (region 256, sweep 12)");
  app.add_option("--basis", config.basis, "Basis size N")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--nodes", config.nodes, "Nodes per side M (bounds: index m)")->capture_default_str();
  app.add_option("--k-max", config.k_max, "Largest derivative / moment order (bounds, sharpness 30; moments 200)");
  app.add_option("--omega", config.omega, "Recursion offset omega")->capture_default_str();
  app.add_option("--nodes-kind", config.nodes_kind, "power | log | custom:FILE")->capture_default_str();
  app.add_option("--parity", config.parity, "Basis parity: even | all")
      ->capture_default_str()
      ->check(CLI::IsMember({"even", "all"}));
  app.add_flag("--normalize-rows", config.normalize_rows, "Scale operator rows to unit norm");
  app.add_option("--out", config.out, "Output directory")->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for randomized witnesses")->capture_default_str();
  app.add_option("--a0", config.a0, "Recursion seed a_0")->capture_default_str();
  app.add_option("--b0", config.b0, "Recursion seed b_0")->capture_default_str();
  app.add_option("--steps", config.steps, "Recursion steps (0: until 1e-12)")->capture_default_str();
  app.add_option("--delta", config.delta, "Gamma-moment exponent delta")->capture_default_str();
  app.add_option("--theta", config.theta, "Gamma-moment margin theta in [0,1)")->capture_default_str();
  app.add_option("--j", config.j, "Dyadic block index for sharpness")->capture_default_str();
  app.add_flag("--blocked", config.blocked, "Restart the first-zero rule on every sub-block");
  app.add_option("--window", config.window, "Block indices built for sharpness")->capture_default_str();

  for (const auto& name : command_names()) app.add_subcommand(name, describe(name))->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  config.command = app.get_subcommands().front()->get_name();

  try {
    const RunOutcome outcome = run_command(config);
    for (const auto& path : outcome.files) std::cout << path.generic_string() << '\n';
    if (!outcome.all_passed) {
      std::cerr << fmt::format("uniq-lab {}: assertion failure (see {}.json)\n", config.command, config.command);
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << fmt::format("uniq-lab {}: error: {}\n", config.command, e.what());
    return 2;
  }
}

}  // namespace uniqlab::cli
