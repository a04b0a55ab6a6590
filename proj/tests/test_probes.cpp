#include <doctest.h>

#include <cmath>
#include <random>

#include "amcx/augmented.hpp"
#include "amcx/probes.hpp"
#include "amcx/sampling.hpp"
#include "support.hpp"

using namespace amcx;
using namespace amcx::test;

namespace {

double f_direct(const FamilyParams& p, const std::vector<double>& x) {
  return det(assemble_W(p, EvalPoint(p, x)));
}

}  // namespace

TEST_CASE("f at the origin") {
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto p = FamilyParams::full(3, 0.1, s);
    const Jet2 f = f_jet(p, EvalPoint(p, {0, 0, 0}));
    CHECK(f.value() == doctest::Approx(5.333333333333333e-2).epsilon(1e-13));
    CHECK(f.grad(2) == 0.0);
  }
  for (int n = 3; n <= 6; ++n)
    for (double eps : {1e-1, 1e-2, 1e-4}) {
      const auto p = FamilyParams::full(n, eps);
      const Jet2 f = f_jet(p, EvalPoint(p, std::vector<double>(n, 0.0)));
      CHECK(rel_err_strict(f.value(), f_origin_prediction(p)) <= 1e-10);
      for (int k = 2; k < n; ++k) CHECK(std::abs(f.grad(k)) <= 1e-12 * std::abs(f.value()));
    }
}

TEST_CASE("jet of f agrees with the scalar pipeline and with differences") {
  std::mt19937_64 rng(41);
  const double h = 1e-5;
  for (int n : {3, 4}) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto p = FamilyParams::full(n, 0.05, s);
      for (int trial = 0; trial < 100; ++trial) {
        const auto x = ball_point(rng, n, 0.2);
        const Jet2 f = f_jet(p, EvalPoint(p, x));
        CHECK(rel_err(f.value(), f_direct(p, x)) <= 1e-10);
        const FJetNorms norms = f_jet_norms(p, x);
        CHECK(norms.value == doctest::Approx(std::abs(f.value())));
        for (int i = 0; i < n; ++i) {
          auto xp = x, xm = x;
          xp[i] += h;
          xm[i] -= h;
          const double fd = (f_direct(p, xp) - f_direct(p, xm)) / (2 * h);
          CHECK(std::abs(f.grad(i) - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
          const Jet2 fp = f_jet(p, EvalPoint(p, xp)), fm = f_jet(p, EvalPoint(p, xm));
          for (int k = 0; k < n; ++k) {
            const double fdh = (fp.grad(k) - fm.grad(k)) / (2 * h);
            CHECK(std::abs(f.hess(k, i) - fdh) <= 1e-6 * std::max(1.0, std::abs(fdh)));
          }
        }
      }
    }
  }
}

TEST_CASE("uniformity criterion") {
  SUBCASE("settles then stays") {
    const std::vector<double> v{1.0, 2.0, 2.01, 2.02, 2.02};
    const Uniformity u = assess_uniformity(v);
    CHECK(u.stabilization_index == 1);
    CHECK(u.stabilized_value == 2.0);
    CHECK(u.pass);
  }
  SUBCASE("keeps growing") {
    const std::vector<double> v{1.0, 2.0, 4.0, 8.0};
    const Uniformity u = assess_uniformity(v);
    CHECK(u.stabilization_index == 3);
    CHECK(u.pass);  // a single stable level is never reached; the last value bounds all others
    const std::vector<double> w{1.0, 2.0, 2.01, 4.0};
    CHECK_FALSE(assess_uniformity(w).pass);
  }
  SUBCASE("excess") {
    const std::vector<double> v{3.0, 3.0, 3.2};
    const Uniformity u = assess_uniformity(v);
    CHECK(u.excess == doctest::Approx(0.2 / 3.0));
    CHECK_FALSE(u.pass);
    CHECK(assess_uniformity(v, 0.01, 0.1).pass);
  }
}

TEST_CASE("blow-up at the origin") {
  const std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4};
  for (int n : {3, 4, 5}) {
    const BlowupTable t = blowup_probe(n, Sign::Plus, eps);
    CHECK(t.pass);
    CHECK(t.monotone);
    CHECK(t.expected_slope == doctest::Approx(-2.0 / n));
    CHECK(t.max_rel_error <= 1e-12);
    CHECK(t.max_slope_error <= 1e-6);
    CHECK_FALSE(t.rows.front().slope.has_value());
  }
  const BlowupTable t3 = blowup_probe(3, Sign::Minus, eps);
  CHECK(t3.rows[0].z33 == doctest::Approx(6.188785111483704).epsilon(1e-12));
  const std::vector<double> two{1e-2, 1e-3};
  const BlowupTable t4 = blowup_probe(4, Sign::Plus, two);
  CHECK(t4.rows[1].z33 / t4.rows[0].z33 == doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));
}

TEST_CASE("sweep grid adequacy: 17 and 33 points per axis within 5%") {
  for (double eps : {1e-2, 1e-4}) {
    SweepConfig coarse;
    coarse.eps_list = {eps};
    coarse.with_holder = false;
    coarse.grid_res = 17;
    SweepConfig fine = coarse;
    fine.grid_res = 33;
    const SweepReport a = uniform_c2_sweep(coarse), b = uniform_c2_sweep(fine);
    CHECK(std::abs(a.records[0].sup_d2f - b.records[0].sup_d2f) <= 0.05 * b.records[0].sup_d2f);
    CHECK(a.records[0].f_origin == doctest::Approx(f_origin_prediction(FamilyParams::full(3, eps))).epsilon(1e-10));
  }
}

TEST_CASE("sweep rejects bad configurations") {
  SweepConfig c;
  c.with_holder = false;
  c.rho = 0.3;
  CHECK_THROWS_AS(uniform_c2_sweep(c), std::invalid_argument);
  c.rho = 0.1;
  c.grid_res = 10;
  CHECK_THROWS_AS(uniform_c2_sweep(c), std::invalid_argument);
  c.grid_res = 9;
  c.eps_list = {1e-2, 1e-1};
  CHECK_THROWS_AS(uniform_c2_sweep(c), std::invalid_argument);
}

TEST_CASE("sup |f| decreases with eps and f(0) follows the closed form") {
  SweepConfig c;
  c.grid_res = 9;
  c.random_count = 20;
  c.with_holder = false;
  c.eps_list = {1e-1, 1e-2, 1e-3};
  const SweepReport r = uniform_c2_sweep(c);
  CHECK(r.f_origin_pass);
  for (std::size_t i = 1; i < r.records.size(); ++i)
    CHECK(r.records[i].f_origin < r.records[i - 1].f_origin);
}

TEST_CASE("Hoelder quotient of a smooth gradient scales like rho^(2/3)") {
  // alpha replaced by 2: z = (1+x1^2)(1+x2^2)(eps^2 + eta^2) has bounded Hessian.
  const GradientFn grad = [](std::span<const double> x) {
    const double a = 1 + x[0] * x[0], b = 1 + x[1] * x[1], s = 1e-4 + x[2] * x[2];
    return std::vector<double>{2 * x[0] * b * s, 2 * x[1] * a * s, 2 * x[2] * a * b};
  };
  const double lip = 2.5;  // bound on the Hessian norm in B_0.2
  double prev = 0.0;
  for (double rho : {0.05, 0.1, 0.2}) {
    const auto pairs = sample_holder_pairs(3, rho, 2000, 5);
    const double q = holder_quotient_max(grad, pairs, 1.0 / 3.0);
    CHECK(q <= lip * std::pow(2 * rho, 2.0 / 3.0));
    CHECK(q > prev);
    prev = q;
  }
}

TEST_CASE("Hoelder probe on the family") {
  const auto p = FamilyParams::full(3, 1e-3);
  const double a = holder_probe(p, 0.1, 1000, 42);
  CHECK(a == holder_probe(p, 0.1, 1000, 42));
  CHECK(a > 0.0);
  CHECK_THROWS_AS(holder_probe(p, 0.1, 999, 42), std::invalid_argument);
}

TEST_CASE("control ansatz loses the C2 bound") {
  const auto r = FamilyParams::remark1();
  const double a = r.alpha();
  CHECK(3 * a - 4 == doctest::Approx(0.0));
  CHECK(4 * a - 4 == doctest::Approx(4.0 / 3.0));
  CHECK(4 * a - 4 < 2.0);

  const std::vector<double> etas{1e-2, 1e-3, 1e-4};
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const Remark1Table t = remark1_probe(etas, 0.2, s);
    CHECK(t.pass);
    CHECK(t.fitted_slope == doctest::Approx(-2.0 / 3.0).epsilon(0.05));
    CHECK(t.min_growth_per_decade >= 3.0);
    CHECK(t.full_bounded);
  }
}

TEST_CASE("log-log slope") {
  const std::vector<double> x{1, 10, 100, 1000};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -0.75));
  CHECK(loglog_slope(x, y) == doctest::Approx(-0.75).epsilon(1e-12));
}
