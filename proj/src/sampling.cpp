#include "amcx/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace amcx {

void PointSet::push(std::span<const double> p) {
  if (p.size() != dim_) throw std::invalid_argument("point dimension mismatch");
  data_.insert(data_.end(), p.begin(), p.end());
}

double lattice_coordinate(double rho, int res, int i) {
  return rho * static_cast<double>(2 * i - (res - 1)) / static_cast<double>(res - 1);
}

namespace {

double norm_sq(std::span<const double> p) {
  double s = 0.0;
  for (double v : p) s += v * v;
  return s;
}

}  // namespace

PointSet build_scan_set(const ScanSetOptions& opts) {
  if (opts.n < 3) throw std::invalid_argument("scan dimension must be at least 3");
  if (opts.grid_res < 2) throw std::invalid_argument("grid resolution must be at least 2");
  if (!(opts.rho > 0.0)) throw std::invalid_argument("radius must be positive");
  const auto n = static_cast<std::size_t>(opts.n);
  const double rho2 = opts.rho * opts.rho * (1.0 + 1e-12);
  PointSet set(n);

  std::vector<double> coord(static_cast<std::size_t>(opts.grid_res));
  for (int i = 0; i < opts.grid_res; ++i) coord[i] = lattice_coordinate(opts.rho, opts.grid_res, i);

  std::vector<int> index(n, 0);
  std::vector<double> p(n);
  for (;;) {
    for (std::size_t k = 0; k < n; ++k) p[k] = coord[index[k]];
    if (norm_sq(p) <= rho2) set.push(p);
    std::size_t k = 0;
    while (k < n && ++index[k] == opts.grid_res) index[k++] = 0;
    if (k == n) break;
  }

  if (opts.axis_count >= 2) {
    std::fill(p.begin(), p.end(), 0.0);
    const int m = static_cast<int>(opts.axis_count);
    for (int i = 0; i < m; ++i) {
      p[2] = lattice_coordinate(opts.rho, m, i);
      set.push(p);
    }
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(-opts.rho, opts.rho);
  for (std::size_t added = 0; added < opts.random_count;) {
    for (auto& v : p) v = uni(rng);
    if (norm_sq(p) <= opts.rho * opts.rho) {
      set.push(p);
      ++added;
    }
  }
  return set;
}

PointSet random_ball_points(int n, double rho, std::size_t count, std::uint64_t seed) {
  const auto dim = static_cast<std::size_t>(n);
  PointSet set(dim);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-rho, rho);
  std::vector<double> p(dim);
  while (set.size() < count) {
    for (auto& v : p) v = uni(rng);
    if (norm_sq(p) <= rho * rho) set.push(p);
  }
  return set;
}

std::vector<std::pair<std::vector<double>, std::vector<double>>> sample_holder_pairs(
    int n, double rho, std::size_t count, std::uint64_t seed, std::size_t radial_start,
    double near_fraction) {
  const auto dim = static_cast<std::size_t>(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-rho, rho);
  std::uniform_real_distribution<double> thin(-rho / 10.0, rho / 10.0);

  auto draw = [&](bool near) {
    std::vector<double> p(dim);
    for (;;) {
      double radial_sq = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        p[k] = (near && k >= radial_start) ? thin(rng) : uni(rng);
        if (k >= radial_start) radial_sq += p[k] * p[k];
      }
      if (near && radial_sq > rho * rho / 100.0) continue;
      if (norm_sq(p) <= rho * rho) return p;
    }
  };

  const auto near_count = static_cast<std::size_t>(std::llround(near_fraction * count));
  std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const bool near = i < near_count;
    auto a = draw(near);
    auto b = draw(near);
    if (a == b) {
      --i;
      continue;
    }
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("AMCX_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t, unsigned)>& body) {
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace amcx
