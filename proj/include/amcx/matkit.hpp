#pragma once

// Small dense matrix kit: determinants by LU, block (Schur) determinants,
// rank-one determinant and inverse updates, leading minors and the smallest
// eigenvalue of a symmetric matrix.

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "amcx/jet.hpp"

namespace amcx {

inline constexpr std::size_t kMaxMatrixDim = 64;

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// General dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const double> data() const { return data_; }

  Matrix transpose() const;
  double norm_inf() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Dense symmetric matrix; entries (i, j) and (j, i) are always identical.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim = 1);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

  /// Throws std::invalid_argument unless `m` is square, exactly symmetric
  /// and finite.
  static SymMatrix from_matrix(const Matrix& m);
  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, double v);

  Matrix to_matrix() const;
  /// Principal submatrix on indices [first, first + size).
  SymMatrix block(std::size_t first, std::size_t size) const;
  /// Reverses the index order (i -> dim-1-i).
  SymMatrix reversed() const;
  double norm_inf() const;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

// --- LU kernels, shared by double and jet pipelines -------------------------

/// Determinant of a row-major dim x dim matrix by LU with partial pivoting.
/// Works for any scalar with +,-,*,/ and abs_value(). Returns exactly zero
/// when a pivot column is entirely zero.
template <class T>
T lu_determinant(std::vector<T> a, std::size_t dim) {
  T det = a[0] * 0.0 + 1.0;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    double best = abs_value(a[col * dim + col]);
    for (std::size_t r = col + 1; r < dim; ++r) {
      const double v = abs_value(a[r * dim + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return a[0] * 0.0;
    if (piv != col) {
      for (std::size_t c = 0; c < dim; ++c) std::swap(a[col * dim + c], a[piv * dim + c]);
      det = -det;
    }
    const T pivot = a[col * dim + col];
    det *= pivot;
    const T inv = 1.0 / pivot;
    for (std::size_t r = col + 1; r < dim; ++r) {
      const T factor = a[r * dim + col] * inv;
      for (std::size_t c = col + 1; c < dim; ++c) a[r * dim + c] -= factor * a[col * dim + c];
    }
  }
  return det;
}

/// Closed-form 3x3 determinant by cofactor expansion along the first row.
template <class T>
T det3_cofactor(const T& a00, const T& a01, const T& a02, const T& a10, const T& a11,
                const T& a12, const T& a20, const T& a21, const T& a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
         a02 * (a10 * a21 - a11 * a20);
}

// --- public operations -------------------------------------------------------

double det(const Matrix& m);
double det(const SymMatrix& m);

/// Solves A X = B by LU with partial pivoting. Throws SingularMatrixError
/// when a pivot falls below `pivot_threshold` in absolute value.
Matrix lu_solve(const Matrix& a, const Matrix& b, double pivot_threshold = 1e-300);
Matrix inverse(const Matrix& a, double pivot_threshold = 1e-300);

/// det [[A, B], [C, D]] = det(D) det(A - B D^{-1} C).
double schur_det(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// det(A + a b^T) = (1 + b^T A^{-1} a) det(A).
double det_rank1_update(const Matrix& a, std::span<const double> u, std::span<const double> v);

/// (A + a b^T)^{-1} = A^{-1} - A^{-1} a b^T A^{-1} / (1 + b^T A^{-1} a).
/// Throws SingularMatrixError if |1 + b^T A^{-1} a| < denominator_threshold.
Matrix inv_rank1_update(const Matrix& a, std::span<const double> u, std::span<const double> v,
                        double denominator_threshold = 1e-12);

/// All dim leading principal minors, in increasing order.
std::vector<double> leading_minors(const SymMatrix& m);

double min_eigenvalue(const SymMatrix& m);

enum class Definiteness { Positive, IndefiniteOrSingular };

inline constexpr double kDefaultMargin = 1e-12;

/// Sylvester verdict from precomputed minors: Positive iff every minor is
/// strictly above margin * max(1, scale).
Definiteness classify_minors(std::span<const double> minors, double scale,
                             double margin = kDefaultMargin);

/// Sylvester test on the leading minors of `m` with scale = ||m||_inf.
Definiteness sylvester_verdict(const SymMatrix& m, double margin = kDefaultMargin);

}  // namespace amcx
