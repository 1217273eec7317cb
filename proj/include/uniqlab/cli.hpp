#pragma once

// uniq-lab subcommands: each writes a CSV table, a JSON summary carrying its
// built-in assertions, and (region, sweep) an SVG heatmap.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace uniqlab::cli {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;
  double alpha = 0.2;
  double beta = 0.2;
  std::optional<std::size_t> grid;   // region 256, sweep 12
  std::size_t basis = 16;
  std::size_t nodes = 150;
  std::optional<std::size_t> k_max;  // bounds/sharpness 30, moments 200
  double omega = 1.0;
  std::string nodes_kind = "power";
  std::string parity = "even";
  bool normalize_rows = false;
  std::filesystem::path out = "uniq-lab-out";
  std::uint64_t seed = 12345;
  double a0 = 10.0;
  double b0 = 10.0;
  std::size_t steps = 0;  // 0: enough steps to reach 1e-12
  double delta = 1.0;
  double theta = 0.0;
  unsigned j = 8;
  bool blocked = false;
  std::size_t window = 200;
};

struct RunOutcome {
  std::vector<std::filesystem::path> files;
  bool all_passed = true;
};

RunOutcome run_region(const RunConfig& config);
RunOutcome run_recursion(const RunConfig& config);
RunOutcome run_bounds(const RunConfig& config);
RunOutcome run_moments(const RunConfig& config);
RunOutcome run_sharpness(const RunConfig& config);
RunOutcome run_sweep(const RunConfig& config);
RunOutcome run_reconstruct(const RunConfig& config);

/// Dispatches on config.command.
RunOutcome run_command(const RunConfig& config);

const std::vector<std::string>& command_names();

/// Full command-line entry point; returns the process exit code
/// (0 iff every assertion passed, 1 on assertion failure, 2 on errors).
int main_entry(int argc, char** argv);

}  // namespace uniqlab::cli
