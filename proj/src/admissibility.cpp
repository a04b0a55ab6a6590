#include "amcx/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "amcx/augmented.hpp"
#include "amcx/sampling.hpp"

namespace amcx {

PointCertificate certify_point(const FamilyParams& params, const EvalPoint& p, double margin) {
  const SymMatrix w = assemble_W(params, p);
  const double scale = w.norm_inf();
  const double threshold = margin * std::max(1.0, scale);

  PointCertificate c;
  c.min_eigenvalue = min_eigenvalue(w);
  c.eigen_positive = c.min_eigenvalue > threshold;
  if (p.on_singular_set() && params.variant() == Variant::Full) {
    c.block_route = true;
    const SymMatrix top = w.block(0, 2);
    c.minors = leading_minors(top);
    const double diag = u3_over_eta(params, p.x1(), p.x2(), 0.0);
    c.minors_positive = classify_minors(c.minors, top.norm_inf(), margin) ==
                            Definiteness::Positive &&
                        diag > threshold;
  } else {
    c.minors = leading_minors(w.reversed());
    c.minors_positive = classify_minors(c.minors, scale, margin) == Definiteness::Positive;
  }
  return c;
}

ScanReport sylvester_scan(const FamilyParams& params, const ScanOptions& options) {
  if (!(options.rho > 0.0)) throw std::invalid_argument("scan radius must be positive");
  if (options.rho > kEvaluationRadiusCap && !options.allow_outside_cap) {
    throw std::invalid_argument("scan radius above 0.5 requires allow_outside_cap");
  }
  const std::size_t n = static_cast<std::size_t>(params.n());
  const PointSet points = build_scan_set({params.n(), options.rho, options.grid_res,
                                          options.random_count, options.axis_count,
                                          options.seed});

  struct Partial {
    std::vector<double> min_minor;
    double min_eig = std::numeric_limits<double>::infinity();
    double min_scaled = std::numeric_limits<double>::infinity();
    bool any_scaled = false;
    std::size_t block_points = 0;
    std::size_t disagreements = 0;
    std::size_t failed = 0;
    std::size_t first_failure = std::numeric_limits<std::size_t>::max();
  };
  const unsigned workers = worker_count();
  std::vector<Partial> partial(workers);

  parallel_for(points.size(), [&](std::size_t begin, std::size_t end, unsigned w) {
    Partial acc;
    acc.min_minor.assign(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = begin; i < end; ++i) {
      const EvalPoint p(params, points.point(i), options.allow_outside_cap);
      const PointCertificate c = certify_point(params, p, options.margin);
      if (c.block_route) {
        ++acc.block_points;
      } else {
        for (std::size_t k = 0; k < n; ++k) acc.min_minor[k] = std::min(acc.min_minor[k], c.minors[k]);
      }
      acc.min_eig = std::min(acc.min_eig, c.min_eigenvalue);
      if (c.minors_positive != c.eigen_positive && std::abs(c.min_eigenvalue) >= kCertificateBand) {
        ++acc.disagreements;
      }
      if (!(c.minors_positive && c.eigen_positive)) {
        ++acc.failed;
        acc.first_failure = std::min(acc.first_failure, i);
      }
      if (!p.on_singular_set() && params.variant() == Variant::Full) {
        const SymMatrix m = scaled_matrix(params, p);
        acc.min_scaled = std::min(acc.min_scaled, det(m));
        acc.any_scaled = true;
      }
    }
    partial[w] = std::move(acc);
  });

  ScanReport r;
  r.n = params.n();
  r.sign = params.sign();
  r.epsilon = params.epsilon();
  r.rho = options.rho;
  r.grid_res = options.grid_res;
  r.seed = options.seed;
  r.point_count = points.size();
  r.min_minor.assign(n, std::numeric_limits<double>::infinity());
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  std::size_t first_failure = std::numeric_limits<std::size_t>::max();
  double min_scaled = std::numeric_limits<double>::infinity();
  bool any_scaled = false;
  for (const Partial& p : partial) {
    if (p.min_minor.empty()) continue;  // worker had no points
    for (std::size_t k = 0; k < n; ++k) r.min_minor[k] = std::min(r.min_minor[k], p.min_minor[k]);
    r.min_eigenvalue = std::min(r.min_eigenvalue, p.min_eig);
    r.block_route_points += p.block_points;
    r.certificate_disagreements += p.disagreements;
    r.failed_points += p.failed;
    first_failure = std::min(first_failure, p.first_failure);
    if (p.any_scaled) {
      any_scaled = true;
      min_scaled = std::min(min_scaled, p.min_scaled);
    }
  }
  if (any_scaled) r.min_scaled_det = min_scaled;
  r.certified = r.failed_points == 0 && r.point_count > 0;
  if (!r.certified && first_failure < points.size()) r.witness = points.point(first_failure);
  return r;
}

namespace {

double rel_residual(double formula, double direct) {
  return std::abs(formula - direct) / std::max(std::abs(direct), std::numeric_limits<double>::min());
}

}  // namespace

MinorResiduals minor_formula_check(const FamilyParams& params, const EvalPoint& p) {
  if (params.variant() != Variant::Full) {
    throw std::invalid_argument("minor formulas apply to the full family only");
  }
  if (p.on_singular_set()) throw std::domain_error("minor formulas need eta > 0");
  const std::size_t n = static_cast<std::size_t>(params.n());
  const SymMatrix w = assemble_W(params, p);

  MinorResiduals out;
  for (std::size_t i = 1; i <= n - 2; ++i) {
    const double direct = det(w.block(2, i));
    out.radial.push_back(rel_residual(radial_leading_minor_formula(params, p, i), direct));
    out.max_residual = std::max(out.max_residual, out.radial.back());
  }
  out.radial_block = rel_residual(radial_block_det_formula(params, p), det(w.block(2, n - 2)));
  out.trailing = rel_residual(trailing_minor_formula(params, p), det(w.block(1, n - 1)));
  out.max_residual = std::max({out.max_residual, out.radial_block, out.trailing});
  return out;
}

CertifyResult certify_rho(int n, std::span<const double> rho_ladder,
                          std::span<const double> eps_list, std::span<const Sign> signs,
                          const ScanOptions& options) {
  if (rho_ladder.empty() || eps_list.empty() || signs.empty()) {
    throw std::invalid_argument("certification needs a ladder, an eps list and a sign");
  }
  for (std::size_t i = 1; i < rho_ladder.size(); ++i) {
    if (!(rho_ladder[i] > rho_ladder[i - 1])) {
      throw std::invalid_argument("rho ladder must be strictly increasing");
    }
  }

  CertifyResult result;
  result.n = n;
  result.rho_ladder.assign(rho_ladder.begin(), rho_ladder.end());
  result.eps_list.assign(eps_list.begin(), eps_list.end());
  result.eps_min_tested = *std::min_element(eps_list.begin(), eps_list.end());
  result.rho_star = std::numeric_limits<double>::infinity();
  result.pass = true;

  for (Sign sign : signs) {
    SignCertification sc;
    sc.sign = sign;
    for (double eps : eps_list) {
      const FamilyParams params = FamilyParams::full(n, eps, sign);
      double best = 0.0;
      // Descend the ladder; the first certified rung is the largest.
      for (std::size_t k = rho_ladder.size(); k-- > 0;) {
        ScanOptions opts = options;
        opts.rho = rho_ladder[k];
        ScanReport scan = sylvester_scan(params, opts);
        const bool ok = scan.certified;
        sc.scans.push_back(std::move(scan));
        if (ok) {
          best = rho_ladder[k];
          break;
        }
      }
      sc.rho_per_epsilon.push_back(best);
    }
    sc.rho_star = *std::min_element(sc.rho_per_epsilon.begin(), sc.rho_per_epsilon.end());
    sc.uniform_in_epsilon = sc.rho_star > 0.0 && sc.rho_star >= sc.rho_per_epsilon.front();
    result.rho_star = std::min(result.rho_star, sc.rho_star);
    result.pass = result.pass && sc.rho_star > 0.0 && sc.uniform_in_epsilon;
    result.per_sign.push_back(std::move(sc));
  }
  return result;
}

}  // namespace amcx
