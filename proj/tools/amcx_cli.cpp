// amcx: verification report for the augmented Monge-Ampere counterexample family.
//
//   amcx <identity|blowup|sweep|remark1|admissible|minors|all> [options]
//
// Exit codes: 0 every pass flag true, 1 verification failure (report still
// written), 2 usage error, 3 I/O failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "amcx/report.hpp"

namespace {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsage = 2, kIo = 3 };

bool write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  out.close();
  return static_cast<bool>(out);
}

std::filesystem::path svg_path(const std::string& out, const std::string& name) {
  if (out.empty()) return "amcx_" + name + ".svg";
  std::filesystem::path p(out);
  return p.parent_path() / (p.stem().string() + "_" + name + ".svg");
}

}  // namespace

int main(int argc, char** argv) {
  amcx::RunConfig config;
  std::optional<double> single_eps;

  CLI::App app{"Numerical verification of the augmented Monge-Ampere counterexample family"};
  app.set_version_flag("--version", amcx::report_version());
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--n", config.n, "Dimension n (3..16)");
  app.add_option("--sign", config.sign, "Sign of the rank-one term")
      ->check(CLI::IsMember({"plus", "minus", "both"}));
  app.add_option("--eps", single_eps, "Single epsilon (replaces the list)");
  app.add_option("--eps-list", config.eps_list, "Strictly decreasing epsilon list")->delimiter(',');
  app.add_option("--rho", config.rho, "Ball radius for sweeps and scans");
  app.add_option("--grid", config.grid_res, "Lattice points per axis (odd)");
  app.add_option("--pairs", config.pair_count, "Hoelder pairs");
  app.add_option("--samples", config.samples, "Random points for identity and minor suites");
  app.add_option("--seed", config.seed, "RNG seed");
  app.add_option("--rho-ladder", config.rho_ladder, "Increasing radii for certify_rho")->delimiter(',');
  app.add_option("--eta-list", config.eta_list, "Eta values for the control ansatz")->delimiter(',');
  app.add_option("--identity-tol", config.identity_tol, "Relative residual bound for identities");
  app.add_option("--minor-tol", config.minor_tol, "Relative residual bound for minor formulas");
  app.add_option("--uniform-tol", config.uniform_excess_tol, "Allowed excess over the stabilized level");
  app.add_option("--out", config.out, "Output file (stdout when omitted)");
  app.add_option("--format", config.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--plot", config.plot, "Write SVG figures next to the report");

  for (const auto& name : amcx::kSubcommands) {
    app.add_subcommand(name, "Run the " + name + " suite" + (name == "all" ? "s" : ""));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  if (single_eps) config.eps_list = {*single_eps};

  amcx::RunResult result;
  try {
    result = amcx::run_suites(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "amcx: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "amcx: " << e.what() << "\n";
    return kVerificationFailure;
  }

  const std::string& body = config.format == "csv" ? result.csv : result.json;
  if (config.out.empty()) {
    std::cout << body;
    if (!std::cout) return kIo;
  } else if (!write_file(config.out, body)) {
    std::cerr << "amcx: cannot write " << config.out << "\n";
    return kIo;
  }
  for (const auto& [name, svg] : result.svgs) {
    const auto path = svg_path(config.out, name);
    if (!write_file(path, svg)) {
      std::cerr << "amcx: cannot write " << path.string() << "\n";
      return kIo;
    }
  }
  std::cerr << (result.pass ? "PASS" : "FAIL") << "\n";
  return result.pass ? kPass : kVerificationFailure;
}
