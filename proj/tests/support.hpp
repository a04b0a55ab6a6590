#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "amcx/matkit.hpp"

namespace amcx::test {

inline double rel_err(double a, double b, double floor = 1.0) {
  return std::abs(a - b) / std::max(floor, std::max(std::abs(a), std::abs(b)));
}

inline double rel_err_strict(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                            double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = u(rng);
  return m;
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                         double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

/// Uniform point in the closed ball of radius rho.
inline std::vector<double> ball_point(std::mt19937_64& rng, std::size_t n, double rho) {
  std::uniform_real_distribution<double> u(-rho, rho);
  std::vector<double> p(n);
  for (;;) {
    double s = 0.0;
    for (auto& x : p) {
      x = u(rng);
      s += x * x;
    }
    if (s <= rho * rho) return p;
  }
}

inline Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline Eigen::MatrixXd to_eigen(const SymMatrix& m) { return to_eigen(m.to_matrix()); }

inline double oracle_det(const Matrix& m) { return to_eigen(m).fullPivLu().determinant(); }

}  // namespace amcx::test
