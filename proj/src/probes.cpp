#include "amcx/probes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <limits>
#include <string>
#include <type_traits>

#include "amcx/matkit.hpp"
#include "amcx/sampling.hpp"

namespace amcx {

namespace {

template <std::size_t Cap>
Jet<Cap> f_jet_fixed(const FamilyParams& params, std::span<const double> coords) {
  const std::size_t n = coords.size();
  std::vector<Jet<Cap>> x;
  x.reserve(n);
  for (std::size_t k = 0; k < n; ++k) x.push_back(Jet<Cap>::variable(k, coords[k], n));
  const auto z = z_closed_form<Jet<Cap>>(params, std::span<const Jet<Cap>>(x));
  const double s = params.sigma();
  std::vector<Jet<Cap>> w(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      w[i * n + j] = z.hess[i * n + j] + s * (z.grad[i] * z.grad[j]);
      w[j * n + i] = w[i * n + j];
    }
  }
  return lu_determinant(std::move(w), n);
}

// Calls fn with the jet of f computed at the smallest sufficient capacity.
template <class Fn>
auto with_f_jet(const FamilyParams& params, std::span<const double> coords, Fn&& fn) {
  if (coords.size() != static_cast<std::size_t>(params.n())) {
    throw std::invalid_argument("coordinate count does not match dimension");
  }
  if (params.n() <= 3) return fn(f_jet_fixed<3>(params, coords));
  if (params.n() <= 4) return fn(f_jet_fixed<4>(params, coords));
  if (params.n() <= 8) return fn(f_jet_fixed<8>(params, coords));
  return fn(f_jet_fixed<16>(params, coords));
}

template <std::size_t Cap>
FJetNorms norms_of(const Jet<Cap>& j) {
  FJetNorms out;
  out.value = std::abs(j.value());
  for (std::size_t i = 0; i < j.dim(); ++i) {
    out.grad_max = std::max(out.grad_max, std::abs(j.grad(i)));
    for (std::size_t k = i; k < j.dim(); ++k)
      out.hess_max = std::max(out.hess_max, std::abs(j.hess(i, k)));
  }
  return out;
}

void require_decreasing(std::span<const double> values, const char* what) {
  if (values.empty()) throw std::invalid_argument(std::string(what) + " list is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
    if (i > 0 && !(values[i] < values[i - 1])) {
      throw std::invalid_argument(std::string(what) + " list must be strictly decreasing");
    }
  }
}

double relative_error(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

Jet2 f_jet(const FamilyParams& params, const EvalPoint& p) {
  return with_f_jet(params, p.coords(), [](const auto& j) { return j.template recast<16>(); });
}

FJetNorms f_jet_norms(const FamilyParams& params, std::span<const double> coords) {
  return with_f_jet(params, coords, [](const auto& j) { return norms_of(j); });
}

double f_origin_prediction(const FamilyParams& params) {
  const double a = params.alpha();
  const double e = params.epsilon();
  return 4.0 * std::pow(a, params.n() - 2) * e * e;
}

Uniformity assess_uniformity(std::span<const double> values, double change_tol,
                             double excess_tol) {
  if (values.empty()) throw std::invalid_argument("uniformity needs at least one value");
  Uniformity u;
  u.stabilization_index = values.size() - 1;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (std::abs(values[i + 1] - values[i]) < change_tol * std::abs(values[i])) {
      u.stabilization_index = i;
      break;
    }
  }
  u.stabilized_value = values[u.stabilization_index];
  u.max_value = *std::max_element(values.begin(), values.end());
  u.excess = u.max_value / u.stabilized_value - 1.0;
  u.pass = std::isfinite(u.excess) && u.excess <= excess_tol;
  return u;
}

BlowupTable blowup_probe(int n, Sign sign, std::span<const double> eps_list) {
  require_decreasing(eps_list, "epsilon");
  BlowupTable t;
  t.n = n;
  t.sign = sign;
  t.monotone = true;
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    const FamilyParams params = FamilyParams::full(n, eps_list[i], sign);
    const EvalPoint origin(params, std::vector<double>(static_cast<std::size_t>(n), 0.0));
    BlowupRow row;
    row.epsilon = eps_list[i];
    row.z33 = eval_z(params, origin).hess(2, 2);
    row.predicted = params.alpha() * std::pow(row.epsilon, params.alpha() - 2.0);
    row.rel_error = relative_error(row.z33, row.predicted);
    t.expected_slope = params.alpha() - 2.0;
    if (i > 0) {
      const BlowupRow& prev = t.rows.back();
      row.slope = (std::log(row.z33) - std::log(prev.z33)) /
                  (std::log(row.epsilon) - std::log(prev.epsilon));
      t.max_slope_error = std::max(t.max_slope_error, std::abs(*row.slope - t.expected_slope));
      if (!(row.z33 > prev.z33)) t.monotone = false;
    }
    t.max_rel_error = std::max(t.max_rel_error, row.rel_error);
    t.rows.push_back(row);
  }
  t.pass = t.monotone && t.max_rel_error <= kBlowupValueTol &&
           t.max_slope_error <= kBlowupSlopeTol;
  return t;
}

double holder_quotient_max(
    const GradientFn& grad,
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& pairs,
    double exponent) {
  double best = 0.0;
  for (const auto& [x, y] : pairs) {
    const auto gx = grad(x);
    const auto gy = grad(y);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      num += (gx[k] - gy[k]) * (gx[k] - gy[k]);
      den += (x[k] - y[k]) * (x[k] - y[k]);
    }
    best = std::max(best, std::sqrt(num) / std::pow(std::sqrt(den), exponent));
  }
  return best;
}

namespace {

double holder_for(const FamilyParams& params,
                  const std::vector<std::pair<std::vector<double>, std::vector<double>>>& pairs) {
  const GradientFn grad = [&params](std::span<const double> x) {
    return z_closed_form<double>(params, x).grad;
  };
  return holder_quotient_max(grad, pairs, 1.0 - 2.0 / params.n());
}

}  // namespace

double holder_probe(const FamilyParams& params, double rho, std::size_t pair_count,
                    std::uint64_t seed) {
  if (pair_count < 1000) throw std::invalid_argument("Hoelder probe needs at least 1000 pairs");
  if (!(rho > 0.0) || rho > kEvaluationRadiusCap) {
    throw std::invalid_argument("Hoelder radius must lie in (0, 0.5]");
  }
  const auto pairs = sample_holder_pairs(params.n(), rho, pair_count, seed, params.radial_start());
  return holder_for(params, pairs);
}

SweepReport uniform_c2_sweep(const SweepConfig& config) {
  if (!(config.rho > 0.0) || config.rho > 0.25) {
    throw std::invalid_argument("sweep radius must lie in (0, 0.25]");
  }
  if (config.grid_res < 9 || config.grid_res % 2 == 0) {
    throw std::invalid_argument("sweep grid resolution must be odd and at least 9");
  }
  require_decreasing(config.eps_list, "epsilon");
  if (config.with_holder && config.pair_count < 1000) {
    throw std::invalid_argument("Hoelder probe needs at least 1000 pairs");
  }

  SweepReport report;
  report.config = config;
  const PointSet points = build_scan_set({config.n, config.rho, config.grid_res,
                                          config.random_count, config.axis_count, config.seed});
  report.point_count = points.size();

  std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
  if (config.with_holder) {
    pairs = sample_holder_pairs(config.n, config.rho, config.pair_count, config.seed);
  }

  const std::vector<double> origin(static_cast<std::size_t>(config.n), 0.0);
  report.f_origin_pass = true;
  for (double eps : config.eps_list) {
    const FamilyParams params = FamilyParams::full(config.n, eps, config.sign);
    const unsigned workers = worker_count();
    std::vector<FJetNorms> partial(workers);
    parallel_for(points.size(), [&](std::size_t begin, std::size_t end, unsigned w) {
      FJetNorms acc;
      for (std::size_t i = begin; i < end; ++i) {
        const FJetNorms v = f_jet_norms(params, points[i]);
        acc.value = std::max(acc.value, v.value);
        acc.grad_max = std::max(acc.grad_max, v.grad_max);
        acc.hess_max = std::max(acc.hess_max, v.hess_max);
      }
      partial[w] = acc;
    });

    EpsilonRecord rec;
    rec.epsilon = eps;
    for (const auto& v : partial) {
      rec.sup_f = std::max(rec.sup_f, v.value);
      rec.sup_df = std::max(rec.sup_df, v.grad_max);
      rec.sup_d2f = std::max(rec.sup_d2f, v.hess_max);
    }
    const EvalPoint o(params, origin);
    rec.z33_origin = eval_z(params, o).hess(2, 2);
    rec.f_origin = f_jet(params, o).value();
    rec.f_origin_predicted = f_origin_prediction(params);
    rec.f_origin_rel_error = relative_error(rec.f_origin, rec.f_origin_predicted);
    if (!(rec.f_origin_rel_error <= kFOriginTol)) report.f_origin_pass = false;
    if (config.with_holder) rec.holder_max = holder_for(params, pairs);
    report.records.push_back(rec);
  }

  std::vector<double> d2f;
  std::vector<double> holder;
  for (const auto& r : report.records) {
    d2f.push_back(r.sup_d2f);
    if (r.holder_max) holder.push_back(*r.holder_max);
  }
  report.c2 = assess_uniformity(d2f, 0.01, config.excess_tol);
  if (config.with_holder) report.holder = assess_uniformity(holder, 0.01, config.excess_tol);
  report.pass = report.c2.pass && report.f_origin_pass && (!report.holder || report.holder->pass);
  return report;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs two or more matching samples");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

Remark1Table remark1_probe(std::span<const double> eta_list, double x1, Sign sign,
                           std::span<const double> full_eps_list) {
  require_decreasing(eta_list, "eta");
  const std::vector<double> default_eps = SweepConfig{}.eps_list;
  if (full_eps_list.empty()) full_eps_list = default_eps;
  require_decreasing(full_eps_list, "epsilon");

  Remark1Table t;
  t.x1 = x1;
  t.sign = sign;
  const FamilyParams control = FamilyParams::remark1(sign);
  t.expected_slope = 4.0 * control.alpha() - 6.0;
  t.min_growth_per_decade = std::numeric_limits<double>::infinity();

  for (double eta : eta_list) {
    Remark1Row row;
    row.eta = eta;
    const Jet2 f = f_jet(control, EvalPoint(control, {x1, eta, 0.0}));
    // eta directions of the control ansatz are x2 and x3
    for (std::size_t a = 1; a < 3; ++a)
      for (std::size_t b = a; b < 3; ++b) row.d2f_eta = std::max(row.d2f_eta, std::abs(f.hess(a, b)));
    for (double eps : full_eps_list) {
      const FamilyParams full = FamilyParams::full(3, eps, sign);
      const Jet2 g = f_jet(full, EvalPoint(full, {x1, 0.0, eta}));
      row.full_d2f_eta = std::max(row.full_d2f_eta, std::abs(g.hess(2, 2)));
    }
    if (!t.rows.empty()) {
      const Remark1Row& prev = t.rows.back();
      const double decades = std::log10(prev.eta / eta);
      row.growth = std::pow(row.d2f_eta / prev.d2f_eta, 1.0 / decades);
      t.min_growth_per_decade = std::min(t.min_growth_per_decade, *row.growth);
    }
    t.rows.push_back(row);
  }

  std::vector<double> etas, d2;
  for (const auto& r : t.rows) {
    etas.push_back(r.eta);
    d2.push_back(r.d2f_eta);
    t.full_excess = std::max(t.full_excess, r.full_d2f_eta / t.rows.front().full_d2f_eta - 1.0);
  }
  if (t.rows.size() >= 2) {
    t.fitted_slope = loglog_slope(etas, d2);
    t.growth_pass = t.min_growth_per_decade >= kRemark1MinGrowth;
    t.slope_pass = std::abs(t.fitted_slope - t.expected_slope) <= kRemark1SlopeTol;
  }
  t.full_bounded = t.full_excess <= kFullControlExcessTol;
  t.pass = t.growth_pass && t.slope_pass && t.full_bounded;
  return t;
}

}  // namespace amcx
