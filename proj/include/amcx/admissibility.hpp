#pragma once

// Grid-certified positive definiteness of W = D^2 z + sigma Dz Dz^T on a ball.
//
// Each scanned point must pass two independent certificates: Sylvester's
// criterion and a positive smallest eigenvalue, both above the margin
// 1e-12 * max(1, ||W||_inf). Minors are taken in trailing order (the leading
// minors of W with its indices reversed), which starts from the large radial
// block and is the ordering the reduction formulas describe. Points with
// eta = 0 are instead routed through the block-diagonal test: the top 2 x 2
// block and the radial diagonal alpha P eps^(alpha-2).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "amcx/family.hpp"
#include "amcx/matkit.hpp"

namespace amcx {

struct ScanOptions {
  double rho = 0.1;
  int grid_res = 33;  // lattice spacing 2 rho / 32 = rho / 16
  std::uint64_t seed = 42;
  std::size_t random_count = 500;
  std::size_t axis_count = 50;
  double margin = kDefaultMargin;
  bool allow_outside_cap = false;  // permit rho > 0.5
};

struct ScanReport {
  int n = 3;
  Sign sign = Sign::Plus;
  double epsilon = 0.0;
  double rho = 0.0;
  int grid_res = 0;
  std::uint64_t seed = 0;
  std::size_t point_count = 0;
  std::size_t block_route_points = 0;
  /// Points where the minor and eigenvalue certificates disagree although
  /// |min eigenvalue| >= 1e-9.
  std::size_t certificate_disagreements = 0;
  std::size_t failed_points = 0;
  std::vector<double> min_minor;  // min over points of the trailing minor of order k+1
  double min_eigenvalue = 0.0;
  std::optional<double> min_scaled_det;  // over points with eta > 0
  bool certified = false;
  std::optional<std::vector<double>> witness;  // first failing point
};

inline constexpr double kCertificateBand = 1e-9;

/// Verdicts at a single point.
struct PointCertificate {
  bool minors_positive = false;
  bool eigen_positive = false;
  bool block_route = false;
  std::vector<double> minors;  // trailing order; top-block minors on the block route
  double min_eigenvalue = 0.0;
};

PointCertificate certify_point(const FamilyParams& params, const EvalPoint& p,
                               double margin = kDefaultMargin);

ScanReport sylvester_scan(const FamilyParams& params, const ScanOptions& options);

struct MinorResiduals {
  std::vector<double> radial;  // det(M_i) closed form vs direct, i = 1 .. n-2
  double radial_block = 0.0;   // det(M) vs (u3/eta)^(n-3)(u33 + s u3^2)
  double trailing = 0.0;       // (n-1) trailing minor of W vs closed form
  double max_residual = 0.0;
};

/// Relative residuals of the closed-form minor formulas against LU on W.
/// Requires eta > 0.
MinorResiduals minor_formula_check(const FamilyParams& params, const EvalPoint& p);

struct SignCertification {
  Sign sign = Sign::Plus;
  double rho_star = 0.0;  // 0 when no rung of the ladder certifies
  std::vector<double> rho_per_epsilon;  // largest certified rung for each eps alone
  /// True when adding smaller eps never shrinks the certified radius below the
  /// value certified for the largest eps.
  bool uniform_in_epsilon = false;
  std::vector<ScanReport> scans;
};

struct CertifyResult {
  int n = 3;
  std::vector<double> rho_ladder;
  std::vector<double> eps_list;
  std::vector<SignCertification> per_sign;
  double rho_star = 0.0;      // min over signs
  double eps_min_tested = 0.0;
  bool pass = false;          // every sign certified some rung, uniformly in eps
};

/// Largest rung of the increasing `rho_ladder` on which every eps in
/// `eps_list` scans as certified, separately for each sign in `signs`.
CertifyResult certify_rho(int n, std::span<const double> rho_ladder,
                          std::span<const double> eps_list, std::span<const Sign> signs,
                          const ScanOptions& options = {});

}  // namespace amcx
