#pragma once

// Second-order forward-mode jets: value, gradient and symmetric Hessian of a
// scalar field with respect to `dim` active variables.
//
// The Hessian is stored as a packed upper triangle, so every jet is exactly
// symmetric by construction. Storage is a fixed-capacity array; arithmetic
// only touches the first `dim` active variables.

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace amcx {

class JetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <std::size_t Cap>
class Jet {
 public:
  static constexpr std::size_t kCapacity = Cap;
  static constexpr std::size_t kPacked = Cap * (Cap + 1) / 2;

  Jet() = default;

  /// Constant jet with `dim` active variables (zero gradient and Hessian).
  static Jet constant(double value, std::size_t dim) {
    check_dim(dim);
    check_finite(value, "value");
    Jet j;
    j.value_ = value;
    j.dim_ = dim;
    return j;
  }

  /// Seed for the coordinate `index`: unit gradient, zero Hessian.
  static Jet variable(std::size_t index, double value, std::size_t dim) {
    check_dim(dim);
    if (index >= dim) {
      throw JetError("jet variable index " + std::to_string(index) +
                     " out of range for dimension " + std::to_string(dim));
    }
    Jet j = constant(value, dim);
    j.grad_[index] = 1.0;
    return j;
  }

  /// Builds a jet from a gradient and a row-major dim x dim Hessian. The
  /// Hessian is symmetrized as (H + H^T) / 2.
  static Jet from_parts(double value, std::span<const double> grad,
                        std::span<const double> hess) {
    const std::size_t d = grad.size();
    check_dim(d);
    if (hess.size() != d * d) {
      throw JetError("hessian size does not match gradient dimension");
    }
    Jet j = constant(value, d);
    for (std::size_t i = 0; i < d; ++i) {
      check_finite(grad[i], "gradient");
      j.grad_[i] = grad[i];
      for (std::size_t k = i; k < d; ++k) {
        check_finite(hess[i * d + k], "hessian");
        check_finite(hess[k * d + i], "hessian");
        j.hess_[idx(i, k)] = 0.5 * (hess[i * d + k] + hess[k * d + i]);
      }
    }
    return j;
  }

  double value() const { return value_; }
  std::size_t dim() const { return dim_; }
  double grad(std::size_t i) const { return grad_[i]; }
  double hess(std::size_t i, std::size_t k) const {
    return i <= k ? hess_[idx(i, k)] : hess_[idx(k, i)];
  }

  std::vector<double> gradient() const {
    return std::vector<double>(grad_.begin(), grad_.begin() + dim_);
  }

  /// Row-major dim x dim copy of the Hessian.
  std::vector<double> hessian() const {
    std::vector<double> h(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) h[i * dim_ + k] = hess(i, k);
    return h;
  }

  bool is_finite() const {
    if (!std::isfinite(value_)) return false;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!std::isfinite(grad_[i])) return false;
      for (std::size_t k = i; k < dim_; ++k)
        if (!std::isfinite(hess_[idx(i, k)])) return false;
    }
    return true;
  }

  /// Converts to a jet of another capacity (dim must fit).
  template <std::size_t Other>
  Jet<Other> recast() const {
    std::vector<double> g = gradient();
    std::vector<double> h = hessian();
    return Jet<Other>::from_parts(value_, g, h);
  }

  Jet operator-() const {
    Jet r = *this;
    r.value_ = -value_;
    for (std::size_t i = 0; i < dim_; ++i) {
      r.grad_[i] = -grad_[i];
      for (std::size_t k = i; k < dim_; ++k) r.hess_[idx(i, k)] = -hess_[idx(i, k)];
    }
    return r;
  }

  Jet& operator+=(const Jet& o) {
    same_dim(o);
    value_ += o.value_;
    for (std::size_t i = 0; i < dim_; ++i) {
      grad_[i] += o.grad_[i];
      for (std::size_t k = i; k < dim_; ++k) hess_[idx(i, k)] += o.hess_[idx(i, k)];
    }
    return *this;
  }

  Jet& operator-=(const Jet& o) {
    same_dim(o);
    value_ -= o.value_;
    for (std::size_t i = 0; i < dim_; ++i) {
      grad_[i] -= o.grad_[i];
      for (std::size_t k = i; k < dim_; ++k) hess_[idx(i, k)] -= o.hess_[idx(i, k)];
    }
    return *this;
  }

  // Product rule: H = Ha*b + Hb*a + ga gb^T + gb ga^T.
  Jet& operator*=(const Jet& o) {
    same_dim(o);
    const double a = value_;
    const double b = o.value_;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t k = i; k < dim_; ++k) {
        const std::size_t p = idx(i, k);
        hess_[p] = hess_[p] * b + o.hess_[p] * a + grad_[i] * o.grad_[k] +
                   o.grad_[i] * grad_[k];
      }
    }
    for (std::size_t i = 0; i < dim_; ++i) grad_[i] = grad_[i] * b + o.grad_[i] * a;
    value_ = a * b;
    return *this;
  }

  Jet& operator/=(const Jet& o) {
    same_dim(o);
    if (o.value_ == 0.0) throw JetError("jet division by zero value");
    return *this *= o.reciprocal();
  }

  Jet& operator+=(double c) {
    value_ += c;
    return *this;
  }
  Jet& operator-=(double c) {
    value_ -= c;
    return *this;
  }
  Jet& operator*=(double c) {
    value_ *= c;
    for (std::size_t i = 0; i < dim_; ++i) {
      grad_[i] *= c;
      for (std::size_t k = i; k < dim_; ++k) hess_[idx(i, k)] *= c;
    }
    return *this;
  }
  Jet& operator/=(double c) {
    if (c == 0.0) throw JetError("jet division by zero value");
    return *this *= (1.0 / c);
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator+(Jet a, double c) { return a += c; }
  friend Jet operator+(double c, Jet a) { return a += c; }
  friend Jet operator-(Jet a, double c) { return a -= c; }
  friend Jet operator-(double c, const Jet& a) { return (-a) += c; }
  friend Jet operator*(Jet a, double c) { return a *= c; }
  friend Jet operator*(double c, Jet a) { return a *= c; }
  friend Jet operator/(Jet a, double c) { return a /= c; }
  friend Jet operator/(double c, const Jet& a) { return a.reciprocal() *= c; }

  /// Unary chain rule for a scalar function with derivatives f1, f2 at value().
  Jet chain(double f0, double f1, double f2) const {
    Jet r;
    r.dim_ = dim_;
    r.value_ = f0;
    for (std::size_t i = 0; i < dim_; ++i) {
      r.grad_[i] = f1 * grad_[i];
      for (std::size_t k = i; k < dim_; ++k) {
        const std::size_t p = idx(i, k);
        r.hess_[p] = f1 * hess_[p] + f2 * grad_[i] * grad_[k];
      }
    }
    return r;
  }

  Jet reciprocal() const {
    if (value_ == 0.0) throw JetError("jet division by zero value");
    const double inv = 1.0 / value_;
    return chain(inv, -inv * inv, 2.0 * inv * inv * inv);
  }

  friend Jet pow(const Jet& a, double p) {
    const double v = a.value_;
    const bool integral = std::floor(p) == p;
    if (!integral && !(v > 0.0)) {
      throw JetError("fractional power of a non-positive jet value");
    }
    if (p == 0.0) return constant(1.0, a.dim_);
    if (p == 1.0) return a;
    if (integral && v == 0.0 && p < 0.0) {
      throw JetError("negative integer power of a zero jet value");
    }
    // v^(p-2) is singular at v = 0 for integer p in {1, 2}; handled above for
    // p = 1, and p = 2 has constant second derivative.
    const double f2 = p == 2.0 ? 2.0 : p * (p - 1.0) * std::pow(v, p - 2.0);
    return a.chain(std::pow(v, p), p * std::pow(v, p - 1.0), f2);
  }

  friend Jet sqrt(const Jet& a) { return pow(a, 0.5); }

  friend double abs_value(const Jet& a) { return std::abs(a.value_); }

 private:
  static constexpr std::size_t idx(std::size_t i, std::size_t k) {
    return i * (2 * Cap - i + 1) / 2 + (k - i);
  }

  static void check_dim(std::size_t dim) {
    if (dim > Cap) {
      throw JetError("jet dimension " + std::to_string(dim) + " exceeds capacity " +
                     std::to_string(Cap));
    }
  }

  static void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw JetError(std::string("non-finite jet ") + what);
  }

  void same_dim(const Jet& o) const {
    if (o.dim_ != dim_) throw JetError("jet dimension mismatch");
  }

  double value_ = 0.0;
  std::size_t dim_ = 0;
  std::array<double, Cap> grad_{};
  std::array<double, kPacked> hess_{};
};

/// Default jet type for the public API (up to 16 active variables).
using Jet2 = Jet<16>;

enum class JetOp { Add, Sub, Mul, Div };

template <std::size_t Cap>
Jet<Cap> jet_arith(const Jet<Cap>& a, const Jet<Cap>& b, JetOp op) {
  switch (op) {
    case JetOp::Add:
      return a + b;
    case JetOp::Sub:
      return a - b;
    case JetOp::Mul:
      return a * b;
    case JetOp::Div:
      return a / b;
  }
  throw JetError("unknown jet operation");
}

inline Jet2 jet_var(std::size_t index, double value, std::size_t dim) {
  return Jet2::variable(index, value, dim);
}

inline double abs_value(double v) { return std::abs(v); }
inline double value_of(double v) { return v; }
template <std::size_t Cap>
double value_of(const Jet<Cap>& j) {
  return j.value();
}

}  // namespace amcx
