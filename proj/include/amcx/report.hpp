#pragma once

// Verification suites behind the command-line tool, and their serialization
// to JSON, CSV and SVG.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace amcx {

struct RunConfig {
  std::string subcommand = "all";  // identity|blowup|sweep|remark1|admissible|minors|all
  int n = 3;
  std::string sign = "both";  // plus|minus|both
  std::vector<double> eps_list{1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  double rho = 0.1;
  int grid_res = 33;
  std::size_t pair_count = 5000;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::vector<double> rho_ladder{0.05, 0.1, 0.15, 0.2, 0.25};
  std::vector<double> eta_list{1e-2, 1e-3, 1e-4};
  double identity_tol = 1e-9;
  double minor_tol = 1e-9;
  double uniform_excess_tol = 0.05;
  std::string out;
  std::string format = "json";  // json|csv
  bool plot = false;
};

inline const std::vector<std::string> kSubcommands{"identity", "blowup",  "sweep", "remark1",
                                                   "admissible", "minors", "all"};

/// Radius of the ball sampled by the identity and minor-formula suites.
inline constexpr double kIdentityRadius = 0.25;

struct RunResult {
  bool pass = false;
  std::string json;  // canonical report: sorted keys, 17 significant digits
  std::string csv;   // flat per-case projection
  std::map<std::string, std::string> svgs;  // figure name -> SVG document
};

/// Validates the configuration; throws std::invalid_argument on bad values.
void validate(const RunConfig& config);

/// Runs the configured suites. Deterministic for a fixed configuration.
RunResult run_suites(const RunConfig& config);

/// Report format version.
std::string report_version();

}  // namespace amcx
