#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "diversity/geometry.hpp"
#include "diversity/kernels.hpp"
#include "diversity/numerics.hpp"

namespace diversity::fixtures {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  Vector vector(std::size_t dim, double lo = -10.0, double hi = 10.0) {
    Vector v(dim);
    for (double& c : v) c = uniform(lo, hi);
    return v;
  }
  Vector unit(std::size_t dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(dim);
    double n = 0.0;
    do {
      for (double& c : v) c = g(rng_);
      n = norm2(v);
    } while (n < 1e-6);
    return scaled(v, 1.0 / n);
  }
  PointSet points(std::size_t dim, std::size_t count, double lo = -10.0, double hi = 10.0) {
    PointSet p(dim);
    for (std::size_t i = 0; i < count; ++i) p.push_back(vector(dim, lo, hi));
    return p;
  }
  /// Nonnegative weights summing to one.
  Vector simplex_weights(std::size_t count) {
    std::exponential_distribution<double> e(1.0);
    Vector w(count);
    double s = 0.0;
    for (double& x : w) s += (x = e(rng_) + 0.05);
    for (double& x : w) x /= s;
    return w;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Random simplex spec: dim+1 affinely independent normals balanced around the origin.
inline SimplexKernelSpec random_simplex(Generator& gen, std::size_t dim) {
  for (;;) {
    SimplexKernelSpec s;
    s.weights = gen.simplex_weights(dim + 1);
    Vector acc(dim, 0.0);
    for (std::size_t l = 0; l < dim; ++l) {
      s.normals.push_back(gen.vector(dim, -2.0, 2.0));
      acc = add(acc, scaled(s.normals.back(), s.weights[l]));
    }
    s.normals.push_back(scaled(acc, -1.0 / s.weights[dim]));
    if (is_affinely_independent(s.normals)) return s;
  }
}

inline PointSet square_corners() {
  return PointSet(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

inline PointSet regular_polygon(std::size_t n, double radius = 1.0, double phase = 0.0) {
  PointSet p(2);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = phase + 2.0 * 3.14159265358979323846 * static_cast<double>(j) /
                                 static_cast<double>(n);
    p.push_back({radius * std::cos(t), radius * std::sin(t)});
  }
  return p;
}

}  // namespace diversity::fixtures
