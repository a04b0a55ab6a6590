#include "amcx/augmented.hpp"

#include <cmath>

namespace amcx {

namespace {

void require_full(const FamilyParams& params) {
  if (params.variant() != Variant::Full) {
    throw std::invalid_argument("reduction formulas apply to the full family only");
  }
}

double leading_product(const EvalPoint& p) {
  return (1.0 + p.x1() * p.x1()) * (1.0 + p.x2() * p.x2());
}

}  // namespace

SymMatrix assemble_W(const FamilyParams& params, const EvalPoint& p) {
  const Jet2 z = eval_z(params, p);
  const std::size_t n = z.dim();
  const double s = params.sigma();
  SymMatrix w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) w.set(i, j, z.hess(i, j) + s * z.grad(i) * z.grad(j));
  return w;
}

SymMatrix profile_matrix(const FamilyParams& params, double x1, double x2, double eta) {
  const Jet2 u = eval_u(params, x1, x2, eta);
  const double s = params.sigma();
  SymMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) m.set(i, j, u.hess(i, j) + s * u.grad(i) * u.grad(j));
  return m;
}

DetRoute reduction_route(const EvalPoint& p) {
  return p.on_singular_set() ? DetRoute::EtaZeroBlock : DetRoute::Generic;
}

double det_reduced(const FamilyParams& params, const EvalPoint& p) {
  require_full(params);
  const int n = params.n();
  const SymMatrix u = profile_matrix(params, p.x1(), p.x2(), p.eta());
  const double q = u3_over_eta(params, p.x1(), p.x2(), p.eta());
  if (reduction_route(p) == DetRoute::EtaZeroBlock) {
    // Block diagonal: top 2x2 block and (n-2) copies of alpha P eps^(alpha-2).
    const double top = u(0, 0) * u(1, 1) - u(0, 1) * u(0, 1);
    return top * std::pow(q, n - 2);
  }
  const double d3 = det3_cofactor(u(0, 0), u(0, 1), u(0, 2), u(1, 0), u(1, 1), u(1, 2),
                                  u(2, 0), u(2, 1), u(2, 2));
  return std::pow(q, n - 3) * d3;
}

AugmentedEval evaluate_augmented(const FamilyParams& params, const EvalPoint& p) {
  AugmentedEval out;
  out.W = assemble_W(params, p);
  out.det_direct = det(out.W);
  out.det_reduced = det_reduced(params, p);
  out.u_jet = eval_u(params, p.x1(), p.x2(), p.eta());
  out.route = reduction_route(p);
  return out;
}

SymMatrix scaled_matrix(const FamilyParams& params, const EvalPoint& p) {
  require_full(params);
  if (p.on_singular_set()) throw std::domain_error("scaled matrix needs eta > 0");
  const double a = params.alpha();
  const double s = params.sigma();
  const double x1 = p.x1();
  const double x2 = p.x2();
  const double A = 1.0 + x1 * x1;
  const double B = 1.0 + x2 * x2;
  const double ra = std::pow(p.r() * p.r(), a / 2.0);
  const double r2_over_eta2 = (p.eta_squared() + params.epsilon() * params.epsilon()) / p.eta_squared();

  SymMatrix m(3);
  m.set(0, 0, 2.0 * B + s * 4.0 * x1 * x1 * B * B * ra);
  m.set(0, 1, 4.0 * x1 * x2 + s * 4.0 * x1 * x2 * A * B * ra);
  m.set(1, 1, 2.0 * A + s * 4.0 * x2 * x2 * A * A * ra);
  m.set(0, 2, 2.0 * a * x1 * B + s * 2.0 * a * x1 * A * B * B * ra);
  m.set(1, 2, 2.0 * a * x2 * A + s * 2.0 * a * x2 * B * A * A * ra);
  m.set(2, 2, a * (a - 2.0) * A * B + a * A * B * r2_over_eta2 + s * a * a * A * A * B * B * ra);
  return m;
}

double scaled_determinant(const FamilyParams& params, const EvalPoint& p) {
  const int n = params.n();
  const double a = params.alpha();
  const double exponent = n * a - 2.0 * n + 2.0;
  const SymMatrix m = scaled_matrix(params, p);
  const double dm = det3_cofactor(m(0, 0), m(0, 1), m(0, 2), m(1, 0), m(1, 1), m(1, 2), m(2, 0),
                                  m(2, 1), m(2, 2));
  return std::pow(a * leading_product(p), n - 3) * p.eta_squared() * std::pow(p.r(), exponent) * dm;
}

double radial_block_det_formula(const FamilyParams& params, const EvalPoint& p) {
  require_full(params);
  const SymMatrix u = profile_matrix(params, p.x1(), p.x2(), p.eta());
  const double q = u3_over_eta(params, p.x1(), p.x2(), p.eta());
  return std::pow(q, params.n() - 3) * u(2, 2);
}

double trailing_minor_formula(const FamilyParams& params, const EvalPoint& p) {
  require_full(params);
  const SymMatrix u = profile_matrix(params, p.x1(), p.x2(), p.eta());
  const double q = u3_over_eta(params, p.x1(), p.x2(), p.eta());
  return (u(1, 1) * u(2, 2) - u(1, 2) * u(1, 2)) * std::pow(q, params.n() - 3);
}

double radial_leading_minor_formula(const FamilyParams& params, const EvalPoint& p,
                                    std::size_t i) {
  require_full(params);
  const std::size_t n = static_cast<std::size_t>(params.n());
  if (i < 1 || i > n - 2) throw std::out_of_range("radial minor order out of range");
  const double q = u3_over_eta(params, p.x1(), p.x2(), p.eta());
  const double c = radial_rank_one_coefficient(params, p.x1(), p.x2(), p.eta());
  double partial = 0.0;
  for (std::size_t j = 2; j < 2 + i; ++j) partial += p.coords()[j] * p.coords()[j];
  // det(q I_i + c x x^T) = q^i (1 + c |x_partial|^2 / q)
  return std::pow(q, static_cast<int>(i)) * (1.0 + c * partial / q);
}

}  // namespace amcx
