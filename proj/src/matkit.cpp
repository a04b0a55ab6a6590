#include "amcx/matkit.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <string>

namespace amcx {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxMatrixDim) {
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " outside [1, 64]");
  }
}

void check_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + " must be square");
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) { check_dim(dim); }

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SymMatrix(from_matrix(Matrix(rows))) {}

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
  check_square(m, "symmetric matrix");
  SymMatrix s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!std::isfinite(m(i, j))) throw std::invalid_argument("non-finite matrix entry");
      if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not exactly symmetric");
      s.data_[i * s.dim_ + j] = m(i, j);
    }
  }
  return s;
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix s(dim);
  for (std::size_t i = 0; i < dim; ++i) s.set(i, i, 1.0);
  return s;
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  SymMatrix s(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) s.set(i, i, diag[i]);
  return s;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite matrix entry");
  data_[i * dim_ + j] = v;
  data_[j * dim_ + i] = v;
}

Matrix SymMatrix::to_matrix() const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SymMatrix SymMatrix::block(std::size_t first, std::size_t size) const {
  if (first + size > dim_) throw std::out_of_range("principal block out of range");
  SymMatrix b(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) b.set(i, j, (*this)(first + i, first + j));
  return b;
}

SymMatrix SymMatrix::reversed() const {
  SymMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) r.set(i, j, (*this)(dim_ - 1 - i, dim_ - 1 - j));
  return r;
}

double SymMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

double det(const Matrix& m) {
  check_square(m, "determinant argument");
  check_dim(m.rows());
  return lu_determinant(std::vector<double>(m.data().begin(), m.data().end()), m.rows());
}

double det(const SymMatrix& m) { return det(m.to_matrix()); }

Matrix lu_solve(const Matrix& a, const Matrix& b, double pivot_threshold) {
  check_square(a, "system matrix");
  const std::size_t n = a.rows();
  if (b.rows() != n) throw std::invalid_argument("right-hand side has wrong row count");
  Matrix lu = a;
  Matrix x = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(piv, col))) piv = r;
    if (std::abs(lu(piv, col)) < pivot_threshold) {
      throw SingularMatrixError("matrix is numerically singular");
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(col, c), lu(piv, c));
      for (std::size_t c = 0; c < x.cols(); ++c) std::swap(x(col, c), x(piv, c));
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = lu(r, col) / lu(col, col);
      for (std::size_t c = col; c < n; ++c) lu(r, c) -= f * lu(col, c);
      for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) -= f * x(col, c);
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      double s = x(i, c);
      for (std::size_t k = i + 1; k < n; ++k) s -= lu(i, k) * x(k, c);
      x(i, c) = s / lu(i, i);
    }
  }
  return x;
}

Matrix inverse(const Matrix& a, double pivot_threshold) {
  return lu_solve(a, Matrix::identity(a.rows()), pivot_threshold);
}

double schur_det(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  check_square(a, "block A");
  check_square(d, "block D");
  if (b.rows() != a.rows() || b.cols() != d.rows() || c.rows() != d.rows() ||
      c.cols() != a.rows()) {
    throw std::invalid_argument("incompatible block shapes");
  }
  const Matrix dinv_c = lu_solve(d, c);
  return det(d) * det(a - b * dinv_c);
}

namespace {

Matrix column(std::span<const double> v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

double dot(std::span<const double> v, const Matrix& col) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * col(i, 0);
  return s;
}

void check_vectors(const Matrix& a, std::span<const double> u, std::span<const double> v) {
  check_square(a, "rank-one base");
  if (u.size() != a.rows() || v.size() != a.rows()) {
    throw std::invalid_argument("update vectors must match matrix dimension");
  }
}

}  // namespace

double det_rank1_update(const Matrix& a, std::span<const double> u, std::span<const double> v) {
  check_vectors(a, u, v);
  const Matrix ainv_u = lu_solve(a, column(u));
  return (1.0 + dot(v, ainv_u)) * det(a);
}

Matrix inv_rank1_update(const Matrix& a, std::span<const double> u, std::span<const double> v,
                        double denominator_threshold) {
  check_vectors(a, u, v);
  const Matrix ainv = inverse(a);
  const Matrix ainv_u = ainv * column(u);
  const Matrix vt_ainv = column(v).transpose() * ainv;
  const double denom = 1.0 + dot(v, ainv_u);
  if (std::abs(denom) < denominator_threshold) {
    throw SingularMatrixError("rank-one update is not invertible (1 + b^T A^-1 a ~ 0)");
  }
  Matrix out = ainv;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) -= ainv_u(i, 0) * vt_ainv(0, j) / denom;
  return out;
}

std::vector<double> leading_minors(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> minors(n);
  // Elimination without pivoting: the k-th pivot is minor_k / minor_{k-1}.
  Matrix a = m.to_matrix();
  double running = 1.0;
  std::size_t k = 0;
  for (; k < n; ++k) {
    const double pivot = a(k, k);
    if (pivot == 0.0) break;
    running *= pivot;
    minors[k] = running;
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a(r, k) / pivot;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  // A vanishing pivot breaks the recurrence; finish each block directly.
  for (; k < n; ++k) minors[k] = det(m.block(0, k + 1));
  return minors;
}

double min_eigenvalue(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Eigen::MatrixXd e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Definiteness classify_minors(std::span<const double> minors, double scale, double margin) {
  const double threshold = margin * std::max(1.0, scale);
  for (double v : minors)
    if (!(v > threshold)) return Definiteness::IndefiniteOrSingular;
  return Definiteness::Positive;
}

Definiteness sylvester_verdict(const SymMatrix& m, double margin) {
  return classify_minors(leading_minors(m), m.norm_inf(), margin);
}

}  // namespace amcx
