// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "amcx/admissibility.hpp"
#include "amcx/augmented.hpp"
#include "amcx/probes.hpp"
#include "amcx/report.hpp"
#include "amcx/sampling.hpp"
#include "support.hpp"

using namespace amcx;
using namespace amcx::test;

namespace {

const std::vector<double> kSweepEps{1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
const std::vector<Sign> kSigns{Sign::Plus, Sign::Minus};

struct Outcome {
  bool pass = false;
  std::string detail;
};

char buf[512];

Outcome identity_suite() {
  double worst = 0.0;
  for (int n : {3, 4, 5})
    for (Sign s : kSigns)
      for (double eps : {1e-1, 1e-2, 1e-3}) {
        const auto p = FamilyParams::full(n, eps, s);
        const PointSet pts = random_ball_points(n, 0.25, 1000, 42);
        for (std::size_t i = 0; i < pts.size(); ++i) {
          const EvalPoint e(p, pts.point(i));
          const double direct = det(assemble_W(p, e));
          worst = std::max(worst, std::abs(direct - det_reduced(p, e)) / std::max(1.0, std::abs(direct)));
        }
      }
  std::snprintf(buf, sizeof buf, "max residual %.3g (bound 1e-9)", worst);
  return {worst <= 1e-9, buf};
}

Matrix outer(std::span<const double> u, std::span<const double> v) {
  Matrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

Outcome update_formula_suite() {
  std::mt19937_64 rng(42);
  double schur = 0.0, rank1 = 0.0, inv_rel = 0.0, residual = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + trial % 6;
    Matrix a = random_matrix(rng, n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<double>(n);
    const double full = det(a);

    const std::size_t k = 1 + trial % (n - 1);
    Matrix A(k, k), B(k, n - k), C(n - k, k), D(n - k, n - k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i < k && j < k) A(i, j) = a(i, j);
        else if (i < k) B(i, j - k) = a(i, j);
        else if (j < k) C(i - k, j) = a(i, j);
        else D(i - k, j - k) = a(i, j);
      }
    schur = std::max(schur, rel_err(schur_det(A, B, C, D), full, 1e-300));

    const auto u = random_vector(rng, n), v = random_vector(rng, n);
    const Matrix updated = a + outer(u, v);
    rank1 = std::max(rank1, rel_err(det_rank1_update(a, u, v), det(updated), 1e-300));

    const Matrix x = inv_rank1_update(a, u, v);
    const Matrix direct = inverse(updated);
    inv_rel = std::max(inv_rel, (x - direct).norm_inf() / direct.norm_inf());
    residual = std::max(residual, (updated * x - Matrix::identity(n)).norm_inf());
  }
  std::snprintf(buf, sizeof buf, "schur %.3g, det update %.3g, inverse %.3g, SM residual %.3g", schur,
                rank1, inv_rel, residual);
  return {schur <= 1e-10 && rank1 <= 1e-10 && inv_rel <= 1e-10 && residual <= 1e-9, buf};
}

Outcome blowup_suite() {
  bool ok = true;
  double rel = 0.0, slope = 0.0;
  for (int n : {3, 4, 5})
    for (Sign s : kSigns) {
      const BlowupTable t = blowup_probe(n, s, kSweepEps);
      ok = ok && t.pass && t.max_rel_error <= 1e-12 && t.max_slope_error <= 1e-6;
      rel = std::max(rel, t.max_rel_error);
      slope = std::max(slope, t.max_slope_error);
    }
  std::snprintf(buf, sizeof buf, "max rel error %.3g, max slope error %.3g", rel, slope);
  return {ok, buf};
}

Outcome uniform_c2_suite() {
  bool ok = true;
  std::string detail;
  for (int n : {3, 4})
    for (Sign s : kSigns) {
      SweepConfig c;
      c.n = n;
      c.sign = s;
      c.with_holder = false;
      const SweepReport r = uniform_c2_sweep(c);
      double f0 = 0.0;
      for (const auto& e : r.records) f0 = std::max(f0, e.f_origin_rel_error);
      ok = ok && r.c2.pass && r.c2.excess <= 0.05 && f0 <= 1e-10;
      std::snprintf(buf, sizeof buf, "n=%d %s: sup|D2f| %.5g excess %.3g f(0) err %.2g; ", n,
                    s == Sign::Plus ? "+" : "-", r.c2.stabilized_value, r.c2.excess, f0);
      detail += buf;
    }
  return {ok, detail};
}

Outcome remark1_suite() {
  bool ok = true;
  std::string detail;
  const std::vector<double> etas{1e-2, 1e-3, 1e-4};
  for (Sign s : kSigns) {
    const Remark1Table t = remark1_probe(etas, 0.2, s, kSweepEps);
    ok = ok && t.min_growth_per_decade >= 3.0 && std::abs(t.fitted_slope + 2.0 / 3.0) <= 0.05 &&
         t.full_bounded;
    std::snprintf(buf, sizeof buf, "%s: growth %.3g/decade slope %.4f full-family excess %.3g; ",
                  s == Sign::Plus ? "+" : "-", t.min_growth_per_decade, t.fitted_slope, t.full_excess);
    detail += buf;
  }
  return {ok, detail};
}

Outcome holder_suite() {
  std::vector<double> q;
  for (double eps : kSweepEps) q.push_back(holder_probe(FamilyParams::full(3, eps), 0.1, 5000, 42));
  const Uniformity u = assess_uniformity(q);
  const double lo = *std::min_element(q.begin(), q.end());
  std::snprintf(buf, sizeof buf,
                "quotient %.5g..%.5g (raw spread %.3g), stabilized %.5g, excess over it %.3g", lo,
                u.max_value, u.max_value / lo - 1.0, u.stabilized_value, u.excess);
  return {u.pass && u.excess <= 0.05, buf};
}

Outcome admissibility_suite() {
  const std::vector<double> ladder{0.05, 0.1, 0.15, 0.2, 0.25};
  bool ok = true;
  std::string detail;
  for (int n : {3, 4}) {
    const CertifyResult r = certify_rho(n, ladder, kSweepEps, kSigns);
    std::size_t failed = 0, disagree = 0;
    for (const auto& s : r.per_sign)
      for (const auto& scan : s.scans) {
        failed += scan.failed_points;
        disagree += scan.certificate_disagreements;
      }
    ok = ok && r.pass && r.rho_star >= 0.05 && failed == 0 && disagree == 0;
    std::snprintf(buf, sizeof buf, "n=%d rho*=%.3g failed=%zu disagreements=%zu; ", n, r.rho_star,
                  failed, disagree);
    detail += buf;
  }
  double worst = 0.0;
  for (int n : {3, 4})
    for (Sign s : kSigns) {
      const auto p = FamilyParams::full(n, 1e-2, s);
      const PointSet pts = random_ball_points(n, 0.25, 500, 42);
      for (std::size_t i = 0; i < pts.size(); ++i)
        worst = std::max(worst, minor_formula_check(p, EvalPoint(p, pts.point(i))).max_residual);
    }
  std::snprintf(buf, sizeof buf, "minor residual %.3g", worst);
  detail += buf;
  return {ok && worst <= 1e-9, detail};
}

Outcome determinism_suite() {
  RunConfig c;
  c.subcommand = "all";
  c.seed = 42;
  const RunResult a = run_suites(c), b = run_suites(c);
  std::snprintf(buf, sizeof buf, "%zu bytes, identical=%s, report pass=%s", a.json.size(),
                a.json == b.json ? "yes" : "no", a.pass ? "yes" : "no");
  return {a.json == b.json && a.pass, buf};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "reduction identity", 10, identity_suite},
      {2, "determinant and inverse update formulas", 5, update_formula_suite},
      {3, "Hessian blow-up at the origin", 1, blowup_suite},
      {4, "uniform C2 bound on f", 120, uniform_c2_suite},
      {5, "control ansatz is not uniformly C2", 10, remark1_suite},
      {6, "uniform Hoelder bound on Dz", 30, holder_suite},
      {7, "admissibility on a certified ball", 120, admissibility_suite},
      {8, "deterministic report", 120, determinism_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s [%d] %s: %s (%.2fs of %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
