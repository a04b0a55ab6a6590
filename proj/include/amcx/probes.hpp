#pragma once

// Numerical probes of the four claims about the family (Hessian blow-up at the
// origin, uniform C^{1,1-2/n} bounds, uniform C^2 bounds on f_eps = det W, and
// the failure of the simpler control ansatz).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "amcx/family.hpp"
#include "amcx/jet.hpp"

namespace amcx {

/// Value, gradient and Hessian of f = det(D^2 z + sigma Dz Dz^T), obtained by
/// running assembly and LU determinant in jet arithmetic.
Jet2 f_jet(const FamilyParams& params, const EvalPoint& p);

/// Sup-norm summary of the jet of f at one point.
struct FJetNorms {
  double value = 0.0;     // |f|
  double grad_max = 0.0;  // max_i |f_i|
  double hess_max = 0.0;  // max_ij |f_ij|
};

/// Same as f_jet but returns only the norms; cheaper (no capacity recast).
FJetNorms f_jet_norms(const FamilyParams& params, std::span<const double> coords);

/// f(0) = 4 alpha^(n-2) eps^2 for the full family.
double f_origin_prediction(const FamilyParams& params);

// --- uniformity criterion ---------------------------------------------------

/// A sequence indexed by decreasing eps is "uniform" when its maximum exceeds
/// the value at the stabilization level by at most `excess_tol` (relative).
/// The stabilization level is the first index whose successor differs from it
/// by less than `change_tol` (relative); the last index if none does.
struct Uniformity {
  std::size_t stabilization_index = 0;
  double stabilized_value = 0.0;
  double max_value = 0.0;
  double excess = 0.0;  // max_value / stabilized_value - 1
  bool pass = false;
};

Uniformity assess_uniformity(std::span<const double> values, double change_tol = 0.01,
                             double excess_tol = 0.05);

// --- blow-up ----------------------------------------------------------------

struct BlowupRow {
  double epsilon = 0.0;
  double z33 = 0.0;
  double predicted = 0.0;  // alpha eps^(alpha-2)
  double rel_error = 0.0;
  std::optional<double> slope;  // d log z33 / d log eps against the previous row
};

struct BlowupTable {
  int n = 3;
  Sign sign = Sign::Plus;
  std::vector<BlowupRow> rows;
  double expected_slope = 0.0;  // alpha - 2 = -2/n
  double max_rel_error = 0.0;
  double max_slope_error = 0.0;
  bool monotone = false;
  bool pass = false;
};

inline constexpr double kBlowupValueTol = 1e-12;
inline constexpr double kBlowupSlopeTol = 1e-6;

BlowupTable blowup_probe(int n, Sign sign, std::span<const double> eps_list);

// --- uniform C^2 sweep and Hoelder probe -------------------------------------

struct SweepConfig {
  int n = 3;
  Sign sign = Sign::Plus;
  double rho = 0.1;
  int grid_res = 33;
  std::vector<double> eps_list{1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  std::uint64_t seed = 42;
  std::size_t random_count = 200;
  std::size_t axis_count = 50;
  std::size_t pair_count = 5000;
  bool with_holder = true;
  double excess_tol = 0.05;
};

struct EpsilonRecord {
  double epsilon = 0.0;
  double sup_f = 0.0;
  double sup_df = 0.0;
  double sup_d2f = 0.0;
  double z33_origin = 0.0;
  double f_origin = 0.0;
  double f_origin_predicted = 0.0;
  double f_origin_rel_error = 0.0;
  std::optional<double> holder_max;
};

struct SweepReport {
  SweepConfig config;
  std::size_t point_count = 0;
  std::vector<EpsilonRecord> records;
  Uniformity c2;
  std::optional<Uniformity> holder;
  bool f_origin_pass = false;
  bool pass = false;
};

inline constexpr double kFOriginTol = 1e-10;

/// Sup over the scan set of |f|, |Df| and |D^2 f| for each eps. Requires
/// rho <= 0.25, odd grid_res >= 9, eps_list strictly decreasing.
SweepReport uniform_c2_sweep(const SweepConfig& config);

using GradientFn = std::function<std::vector<double>(std::span<const double>)>;

/// max ||grad(x) - grad(y)|| / ||x - y||^exponent over the given pairs.
double holder_quotient_max(
    const GradientFn& grad,
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& pairs,
    double exponent);

/// Hoelder quotient of Dz with exponent 1 - 2/n over `pair_count` seeded
/// pairs in B_rho. Requires pair_count >= 1000.
double holder_probe(const FamilyParams& params, double rho, std::size_t pair_count,
                    std::uint64_t seed);

// --- control ansatz ---------------------------------------------------------

struct Remark1Row {
  double eta = 0.0;
  double d2f_eta = 0.0;  // max |f_ab| over the eta directions a, b
  std::optional<double> growth;  // ratio to the previous row, per decade
  double full_d2f_eta = 0.0;  // full family at (x1, 0, eta), max over eps list
};

struct Remark1Table {
  double x1 = 0.2;
  Sign sign = Sign::Plus;
  std::vector<Remark1Row> rows;
  double fitted_slope = 0.0;
  double expected_slope = 0.0;  // 4 alpha - 6 = -2/3
  double min_growth_per_decade = 0.0;
  double full_excess = 0.0;  // max over rows of full_d2f_eta / first row - 1
  bool growth_pass = false;
  bool slope_pass = false;
  bool full_bounded = false;
  bool pass = false;
};

inline constexpr double kRemark1SlopeTol = 0.05;
inline constexpr double kRemark1MinGrowth = 3.0;
inline constexpr double kFullControlExcessTol = 0.05;

/// Second eta-derivatives of f for the control ansatz at (x1, eta, 0),
/// compared against the full family at (x1, 0, eta) over `full_eps_list`.
Remark1Table remark1_probe(std::span<const double> eta_list, double x1 = 0.2,
                           Sign sign = Sign::Plus,
                           std::span<const double> full_eps_list = {});

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace amcx
