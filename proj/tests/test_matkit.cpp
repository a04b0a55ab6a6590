#include <doctest.h>

#include <random>

#include "amcx/matkit.hpp"
#include "support.hpp"

using namespace amcx;
using namespace amcx::test;

namespace {

Matrix well_conditioned(std::mt19937_64& rng, std::size_t n) {
  Matrix a = random_matrix(rng, n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<double>(n);
  return a;
}

SymMatrix random_spd(std::mt19937_64& rng, std::size_t n) {
  const Matrix a = random_matrix(rng, n, n);
  Matrix s = a.transpose() * a + Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) s(i, j) = s(j, i);
  return SymMatrix::from_matrix(s);
}

Matrix outer(std::span<const double> u, std::span<const double> v) {
  Matrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

}  // namespace

TEST_CASE("det on small cases") {
  const std::vector<double> d{1, 2, 3};
  CHECK(det(SymMatrix::diagonal(d)) == doctest::Approx(6.0));
  for (std::size_t n = 1; n <= 10; ++n) CHECK(det(SymMatrix::identity(n)) == 1.0);
  CHECK(det(SymMatrix{{2, 1}, {1, 2}}) == doctest::Approx(3.0));
  CHECK(det(Matrix{{0, 1}, {1, 0}}) == -1.0);
  CHECK(det(Matrix{{1, 2}, {2, 4}}) == 0.0);
}

TEST_CASE("det matches Eigen full-pivot LU and flips sign under a row swap") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 8;
    Matrix a = random_matrix(rng, n, n);
    const double d = det(a);
    CHECK(rel_err(d, oracle_det(a), 1e-300) <= 1e-10);
    if (n >= 2) {
      Matrix b = a;
      for (std::size_t j = 0; j < n; ++j) std::swap(b(0, j), b(1, j));
      CHECK(det(b) == doctest::Approx(-d).epsilon(1e-12));
    }
  }
}

TEST_CASE("SymMatrix validation") {
  CHECK_THROWS_AS(SymMatrix::from_matrix(Matrix{{1, 2}, {3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_matrix(Matrix(2, 3)), std::invalid_argument);
  SymMatrix s(3);
  s.set(0, 2, 5.0);
  CHECK(s(2, 0) == 5.0);
  const SymMatrix r = SymMatrix{{1, 2, 3}, {2, 4, 5}, {3, 5, 6}}.reversed();
  CHECK(r(0, 0) == 6.0);
  CHECK(r(0, 2) == 3.0);
  CHECK(r(1, 2) == 2.0);
}

TEST_CASE("schur_det") {
  CHECK(schur_det(Matrix{{2}}, Matrix{{1}}, Matrix{{1}}, Matrix{{2}}) == doctest::Approx(3.0));
  std::mt19937_64 rng(12);
  SUBCASE("block diagonal") {
    const Matrix a = well_conditioned(rng, 2), d = well_conditioned(rng, 3);
    CHECK(rel_err(schur_det(a, Matrix(2, 3), Matrix(3, 2), d), det(a) * det(d)) <= 1e-12);
  }
  SUBCASE("random symmetric 5x5 split 2 + 3") {
    for (int trial = 0; trial < 500; ++trial) {
      const SymMatrix s = random_spd(rng, 5);
      Matrix a(2, 2), b(2, 3), c(3, 2), d(3, 3);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
          if (i < 2 && j < 2) a(i, j) = s(i, j);
          else if (i < 2) b(i, j - 2) = s(i, j);
          else if (j < 2) c(i - 2, j) = s(i, j);
          else d(i - 2, j - 2) = s(i, j);
        }
      CHECK(rel_err(schur_det(a, b, c, d), oracle_det(s.to_matrix()), 1e-300) <= 1e-10);
    }
  }
}

TEST_CASE("det_rank1_update") {
  const std::vector<double> e1{1, 0, 0}, e2{0, 1, 0};
  CHECK(det_rank1_update(Matrix::identity(3), e1, e2) == doctest::Approx(1.0));
  CHECK(det_rank1_update(Matrix::identity(3), e1, e1) == doctest::Approx(2.0));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const Matrix a = well_conditioned(rng, 4);
    const auto u = random_vector(rng, 4), v = random_vector(rng, 4);
    CHECK(rel_err(det_rank1_update(a, u, v), oracle_det(a + outer(u, v)), 1e-300) <= 1e-10);
  }
}

TEST_CASE("inv_rank1_update") {
  const std::vector<double> e1{1, 0, 0};
  const Matrix x = inv_rank1_update(Matrix::identity(3), e1, e1);
  CHECK(x(0, 0) == doctest::Approx(0.5));
  CHECK(x(1, 1) == doctest::Approx(1.0));
  CHECK(x(0, 1) == 0.0);

  std::mt19937_64 rng(14);
  const Matrix a = well_conditioned(rng, 5);
  const Matrix unchanged = inv_rank1_update(a, std::vector<double>(5, 0.0), random_vector(rng, 5));
  CHECK((unchanged - inverse(a)).norm_inf() <= 1e-14);

  // Singular update: A = I, u = -e1, v = e1 gives 1 + v^T u = 0.
  const std::vector<double> m1{-1, 0, 0};
  CHECK_THROWS_AS(inv_rank1_update(Matrix::identity(3), m1, e1), SingularMatrixError);

  for (int trial = 0; trial < 500; ++trial) {
    const Matrix b = well_conditioned(rng, 5);
    const auto u = random_vector(rng, 5), v = random_vector(rng, 5);
    const Matrix inv = inv_rank1_update(b, u, v);
    CHECK(((b + outer(u, v)) * inv - Matrix::identity(5)).norm_inf() <= 1e-9);
  }
}

TEST_CASE("lu_solve and inverse") {
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), SingularMatrixError);
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Matrix a = well_conditioned(rng, n);
    const Matrix b = random_matrix(rng, n, 2);
    CHECK((a * lu_solve(a, b) - b).norm_inf() <= 1e-12);
  }
}

TEST_CASE("leading minors and eigenvalues") {
  const std::vector<double> d{1, 2, 3};
  const auto m1 = leading_minors(SymMatrix::diagonal(d));
  CHECK(m1 == std::vector<double>{1, 2, 6});
  const auto m2 = leading_minors(SymMatrix{{2, 1}, {1, 2}});
  CHECK(m2[0] == doctest::Approx(2));
  CHECK(m2[1] == doctest::Approx(3));
  // zero leading pivot still yields the right minors
  const auto m3 = leading_minors(SymMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 2}});
  CHECK(m3[0] == 0.0);
  CHECK(m3[1] == doctest::Approx(-1));
  CHECK(m3[2] == doctest::Approx(-2));

  const std::vector<double> d2{3, -1, 5};
  CHECK(min_eigenvalue(SymMatrix::diagonal(d2)) == doctest::Approx(-1));
  CHECK(min_eigenvalue(SymMatrix::identity(4)) == doctest::Approx(1));
  CHECK(min_eigenvalue(SymMatrix{{2, 1}, {1, 2}}) == doctest::Approx(1));

  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    const SymMatrix s = random_spd(rng, 6);
    for (double m : leading_minors(s)) CHECK(m > 0.0);
    CHECK(sylvester_verdict(s) == Definiteness::Positive);
    // Each minor agrees with the oracle determinant of the leading block.
    const auto minors = leading_minors(s);
    for (std::size_t k = 1; k <= 6; ++k)
      CHECK(rel_err(minors[k - 1], oracle_det(s.block(0, k).to_matrix())) <= 1e-12);
  }
}

TEST_CASE("Sylvester verdict agrees with the eigenvalue sign on random symmetric matrices") {
  std::mt19937_64 rng(17);
  int positive = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 5;
    Matrix a = random_matrix(rng, n, n);
    Matrix s = a + a.transpose();
    for (std::size_t i = 0; i < n; ++i) s(i, i) += 2.0;
    const SymMatrix sym = SymMatrix::from_matrix(s);
    const double lam = min_eigenvalue(sym);
    if (std::abs(lam) < 1e-6) continue;
    const bool pd = sylvester_verdict(sym) == Definiteness::Positive;
    CHECK(pd == (lam > 0.0));
    positive += pd;
  }
  CHECK(positive > 0);
}

TEST_CASE("classify_minors applies the scaled margin") {
  const std::vector<double> minors{1.0, 5e-11};
  CHECK(classify_minors(minors, 1.0) == Definiteness::Positive);
  CHECK(classify_minors(minors, 10.0) == Definiteness::Positive);
  CHECK(classify_minors(minors, 1e3) == Definiteness::IndefiniteOrSingular);
}
