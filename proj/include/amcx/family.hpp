#pragma once

// The counterexample family
//
//   z(x) = (1 + x1^2)(1 + x2^2)(eps^2 + eta^2)^(alpha/2),
//   eta = |(x3, ..., xn)|,  alpha = 2 - 2/n,
//
// and the simpler control ansatz z(x) = (1 + x1^2) eta^(4/3) in R^3 with
// eta = |(x2, x3)|, whose right-hand side fails to be C^2.
//
// Both are written as P(x_lead) * s^(alpha/2) with s = eps^2 + sum of the
// squared radial coordinates, so every derivative is a polynomial in x times
// a power of s. The radial chain rule uses the ratios u3/eta and
// (u33 - u3/eta)/eta^2, which are evaluated in closed form and stay regular
// at eta = 0.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "amcx/jet.hpp"

namespace amcx {

enum class Variant { Full, Remark1 };

enum class Sign : int { Plus = 1, Minus = -1 };

inline double sigma_of(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

/// Points farther than this from the origin require an explicit opt-in.
inline constexpr double kEvaluationRadiusCap = 0.5;

inline constexpr int kMaxFamilyDim = 16;

class FamilyParams {
 public:
  /// Full family: n >= 3, eps > 0, alpha = 2 - 2/n.
  static FamilyParams full(int n, double epsilon, Sign sign = Sign::Plus);
  /// Control ansatz: n = 3, alpha = 4/3, no regularization (eps = 0).
  static FamilyParams remark1(Sign sign = Sign::Plus);

  int n() const { return n_; }
  double epsilon() const { return epsilon_; }
  Sign sign() const { return sign_; }
  double sigma() const { return sigma_of(sign_); }
  Variant variant() const { return variant_; }
  double alpha() const { return alpha_; }
  /// Index of the first radial coordinate (2 for Full, 1 for Remark1).
  std::size_t radial_start() const { return variant_ == Variant::Full ? 2 : 1; }

  FamilyParams with_sign(Sign s) const;
  FamilyParams with_epsilon(double eps) const;

 private:
  FamilyParams(int n, double eps, Sign sign, Variant variant, double alpha)
      : n_(n), epsilon_(eps), sign_(sign), variant_(variant), alpha_(alpha) {}

  int n_;
  double epsilon_;
  Sign sign_;
  Variant variant_;
  double alpha_;
};

/// A point of R^n with its reduced coordinates (x1, x2, eta, r).
class EvalPoint {
 public:
  /// Throws std::invalid_argument on dimension mismatch, non-finite input, or
  /// |x| > 0.5 unless `allow_outside_cap` is set.
  EvalPoint(const FamilyParams& params, std::vector<double> coords,
            bool allow_outside_cap = false);

  std::span<const double> coords() const { return coords_; }
  double x1() const { return coords_[0]; }
  double x2() const { return coords_.size() > 1 ? coords_[1] : 0.0; }
  double eta() const { return eta_; }
  double eta_squared() const { return eta_sq_; }
  double r() const { return r_; }
  /// True when every radial coordinate is literally zero.
  bool on_singular_set() const { return eta_sq_ == 0.0; }

 private:
  std::vector<double> coords_;
  double eta_sq_ = 0.0;
  double eta_ = 0.0;
  double r_ = 0.0;
};

/// Value, gradient and row-major Hessian of z in scalar type T.
template <class T>
struct FieldDerivatives {
  T value;
  std::vector<T> grad;
  std::vector<T> hess;
};

namespace detail {

template <class T>
T power(const T& s, double p) {
  using std::pow;
  return pow(s, p);
}

}  // namespace detail

/// Closed-form value, gradient and Hessian of z at `x`, generic in the scalar
/// type (double for pointwise values, a jet for differentiating functions of
/// z and its derivatives).
///
/// With P the product of (1 + x_i^2) over the leading coordinates and
/// s = eps^2 + eta^2:
///   z_i   = 2 x_i P_i s^(a/2)               leading i
///   z_ii  = 2 P_i s^(a/2),  z_12 = 4 x1 x2 s^(a/2)
///   z_k   = (u3/eta) x_k                    radial k
///   z_ik  = (u_i3/eta) x_k
///   z_kl  = (u3/eta) delta_kl + ((u33 - u3/eta)/eta^2) x_k x_l
/// where u3/eta = a P s^(a/2-1), u_i3/eta = 2 a x_i P_i s^(a/2-1) and
/// (u33 - u3/eta)/eta^2 = a(a-2) P s^(a/2-2).
template <class T>
FieldDerivatives<T> z_closed_form(const FamilyParams& params, std::span<const T> x) {
  const std::size_t n = static_cast<std::size_t>(params.n());
  if (x.size() != n) throw std::invalid_argument("coordinate count does not match dimension");
  const std::size_t m = params.radial_start();
  const double a = params.alpha();
  const double eps2 = params.epsilon() * params.epsilon();

  T s = x[0] * 0.0 + eps2;
  for (std::size_t k = m; k < n; ++k) s += x[k] * x[k];
  if (!(value_of(s) > 0.0)) {
    throw std::domain_error("family is singular on eta = 0 when eps = 0");
  }

  // Leading factors A_i = 1 + x_i^2 and the products with one factor removed.
  std::vector<T> lead_factor;
  for (std::size_t i = 0; i < m; ++i) lead_factor.push_back(1.0 + x[i] * x[i]);
  std::vector<T> others(m, x[0] * 0.0 + 1.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) others[i] *= lead_factor[j];
  T prod = others[0] * lead_factor[0];

  const T radial = detail::power(s, a / 2.0);
  const T radial_m1 = detail::power(s, a / 2.0 - 1.0);
  const T radial_m2 = detail::power(s, a / 2.0 - 2.0);
  const T u3_over_eta = a * prod * radial_m1;
  const T curvature = a * (a - 2.0) * prod * radial_m2;

  FieldDerivatives<T> out;
  out.value = prod * radial;
  out.grad.assign(n, x[0] * 0.0);
  out.hess.assign(n * n, x[0] * 0.0);
  auto H = [&](std::size_t i, std::size_t j) -> T& { return out.hess[i * n + j]; };

  std::vector<T> ui3_over_eta(m, x[0] * 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    out.grad[i] = 2.0 * x[i] * others[i] * radial;
    H(i, i) = 2.0 * others[i] * radial;
    ui3_over_eta[i] = 2.0 * a * x[i] * others[i] * radial_m1;
    for (std::size_t j = i + 1; j < m; ++j) {
      // only reached for the two-factor Full variant, where P_ij = 1
      H(i, j) = 4.0 * x[i] * x[j] * radial;
      H(j, i) = H(i, j);
    }
  }
  for (std::size_t k = m; k < n; ++k) {
    out.grad[k] = u3_over_eta * x[k];
    for (std::size_t i = 0; i < m; ++i) {
      H(i, k) = ui3_over_eta[i] * x[k];
      H(k, i) = H(i, k);
    }
    for (std::size_t l = k; l < n; ++l) {
      T v = curvature * x[k] * x[l];
      if (k == l) v += u3_over_eta;
      H(k, l) = v;
      H(l, k) = std::move(v);
    }
  }
  return out;
}

/// Value, full n-gradient and n x n Hessian of z at p.
Jet2 eval_z(const FamilyParams& params, const EvalPoint& p);

/// Reduced jet of u(x1, x2, eta) with variables (x1, x2, eta). Full variant.
Jet2 eval_u(const FamilyParams& params, double x1, double x2, double eta);

/// u3/eta = alpha (1+x1^2)(1+x2^2) r^(alpha-2), evaluated without dividing
/// by eta. Full variant.
double u3_over_eta(const FamilyParams& params, double x1, double x2, double eta);

/// (u33 +/- u3^2 - u3/eta) / eta^2, the rank-one coefficient of the radial
/// block, evaluated without dividing by eta. Full variant.
double radial_rank_one_coefficient(const FamilyParams& params, double x1, double x2, double eta);

}  // namespace amcx
