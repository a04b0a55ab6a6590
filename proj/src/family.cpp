#include "amcx/family.hpp"

#include <string>

namespace amcx {

FamilyParams FamilyParams::full(int n, double epsilon, Sign sign) {
  if (n < 3 || n > kMaxFamilyDim) {
    throw std::invalid_argument("dimension n must lie in [3, 16], got " + std::to_string(n));
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be a positive finite number");
  }
  return FamilyParams(n, epsilon, sign, Variant::Full, 2.0 - 2.0 / n);
}

FamilyParams FamilyParams::remark1(Sign sign) {
  return FamilyParams(3, 0.0, sign, Variant::Remark1, 4.0 / 3.0);
}

FamilyParams FamilyParams::with_sign(Sign s) const {
  FamilyParams p = *this;
  p.sign_ = s;
  return p;
}

FamilyParams FamilyParams::with_epsilon(double eps) const {
  if (variant_ != Variant::Full) throw std::invalid_argument("control ansatz has no epsilon");
  return full(n_, eps, sign_);
}

EvalPoint::EvalPoint(const FamilyParams& params, std::vector<double> coords,
                     bool allow_outside_cap)
    : coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(params.n())) {
    throw std::invalid_argument("point has " + std::to_string(coords_.size()) +
                                " coordinates, expected " + std::to_string(params.n()));
  }
  double norm_sq = 0.0;
  for (double c : coords_) {
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite coordinate");
    norm_sq += c * c;
  }
  if (!allow_outside_cap && norm_sq > kEvaluationRadiusCap * kEvaluationRadiusCap) {
    throw std::invalid_argument("point lies outside |x| <= 0.5; opt in to evaluate there");
  }
  for (std::size_t k = params.radial_start(); k < coords_.size(); ++k)
    eta_sq_ += coords_[k] * coords_[k];
  eta_ = std::sqrt(eta_sq_);
  r_ = std::sqrt(eta_sq_ + params.epsilon() * params.epsilon());
}

Jet2 eval_z(const FamilyParams& params, const EvalPoint& p) {
  if (params.variant() == Variant::Remark1 && p.on_singular_set()) {
    throw std::domain_error("control ansatz is not differentiable at eta = 0");
  }
  const auto d = z_closed_form<double>(params, p.coords());
  return Jet2::from_parts(d.value, d.grad, d.hess);
}

namespace {

void require_full(const FamilyParams& params) {
  if (params.variant() != Variant::Full) {
    throw std::invalid_argument("reduced (x1, x2, eta) evaluation needs the full family");
  }
}

}  // namespace

Jet2 eval_u(const FamilyParams& params, double x1, double x2, double eta) {
  require_full(params);
  if (!(eta >= 0.0)) throw std::invalid_argument("eta must be non-negative");
  const double a = params.alpha();
  const double e2 = params.epsilon() * params.epsilon();
  const double A = 1.0 + x1 * x1;
  const double B = 1.0 + x2 * x2;
  const double s = e2 + eta * eta;
  const double ra = std::pow(s, a / 2.0);          // r^alpha
  const double ra2 = std::pow(s, a / 2.0 - 1.0);   // r^(alpha-2)
  const double ra4 = std::pow(s, a / 2.0 - 2.0);   // r^(alpha-4)

  const double grad[3] = {
      2.0 * x1 * B * ra,
      2.0 * x2 * A * ra,
      a * A * B * eta * ra2,
  };
  const double u11 = 2.0 * B * ra;
  const double u12 = 4.0 * x1 * x2 * ra;
  const double u22 = 2.0 * A * ra;
  const double u13 = 2.0 * a * x1 * B * eta * ra2;
  const double u23 = 2.0 * a * x2 * A * eta * ra2;
  const double u33 = a * (a - 2.0) * A * B * eta * eta * ra4 + a * A * B * ra2;
  const double hess[9] = {u11, u12, u13, u12, u22, u23, u13, u23, u33};
  return Jet2::from_parts(A * B * ra, grad, hess);
}

double u3_over_eta(const FamilyParams& params, double x1, double x2, double eta) {
  require_full(params);
  const double s = params.epsilon() * params.epsilon() + eta * eta;
  return params.alpha() * (1.0 + x1 * x1) * (1.0 + x2 * x2) * std::pow(s, params.alpha() / 2.0 - 1.0);
}

double radial_rank_one_coefficient(const FamilyParams& params, double x1, double x2,
                                   double eta) {
  require_full(params);
  const double a = params.alpha();
  const double s = params.epsilon() * params.epsilon() + eta * eta;
  const double q = u3_over_eta(params, x1, x2, eta);
  // (u33 - u3/eta)/eta^2 = a(a-2) P r^(a-4); the sign term adds (u3/eta)^2.
  return a * (a - 2.0) * (1.0 + x1 * x1) * (1.0 + x2 * x2) * std::pow(s, a / 2.0 - 2.0) +
         params.sigma() * q * q;
}

}  // namespace amcx
