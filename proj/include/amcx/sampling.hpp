#pragma once

// Deterministic point sets for sweeps and scans, and a small parallel-for.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace amcx {

/// Flat row-major list of points in R^n.
class PointSet {
 public:
  explicit PointSet(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  std::span<const double> operator[](std::size_t i) const {
    return std::span<const double>(data_).subspan(i * dim_, dim_);
  }
  std::vector<double> point(std::size_t i) const {
    auto s = (*this)[i];
    return {s.begin(), s.end()};
  }
  void push(std::span<const double> p);

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

struct ScanSetOptions {
  int n = 3;
  double rho = 0.1;
  int grid_res = 33;           // lattice points per axis over [-rho, rho]
  std::size_t random_count = 200;
  std::size_t axis_count = 50;  // points on the segment (0, 0, t, 0, ...)
  std::uint64_t seed = 42;
};

/// Lattice over [-rho, rho]^n clipped to the closed ball, then the axis
/// segment, then seeded uniform points in the ball.
PointSet build_scan_set(const ScanSetOptions& opts);

/// `count` seeded points uniform in the closed ball B_rho.
PointSet random_ball_points(int n, double rho, std::size_t count, std::uint64_t seed);

/// Lattice coordinate i of `res` points spanning [-rho, rho]; the middle
/// index of an odd lattice is exactly zero.
double lattice_coordinate(double rho, int res, int i);

/// Pairs for Hoelder quotients: `near_fraction` of them with both endpoints
/// within rho/10 of the set {x_k = 0 for k >= radial_start}, the rest uniform
/// in the ball.
std::vector<std::pair<std::vector<double>, std::vector<double>>> sample_holder_pairs(
    int n, double rho, std::size_t count, std::uint64_t seed, std::size_t radial_start = 2,
    double near_fraction = 0.7);

/// Worker count: hardware concurrency, capped by AMCX_THREADS when set.
unsigned worker_count();

/// Runs body(begin, end, worker) over [0, count) split into contiguous chunks.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t, unsigned)>& body);

}  // namespace amcx
