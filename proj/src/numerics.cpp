#include "diversity/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "diversity/errors.hpp"

namespace diversity {

SymmetricMatrix::SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

SymmetricMatrix::SymmetricMatrix(const std::vector<Vector>& rows) : SymmetricMatrix(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw DomainError("symmetric matrix must be square");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      const double v = 0.5 * (rows[i][j] + rows[j][i]);
      data_[i * n_ + j] = v;
      data_[j * n_ + i] = v;
    }
  }
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
  data_[i * n_ + j] = v;
  data_[j * n_ + i] = v;
}

double SymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

EigenDecomposition jacobi_eigenvalues(const SymmetricMatrix& m, double tol) {
  const std::size_t n = m.order();
  std::vector<double> a(n * n);
  std::vector<double> v(n * n, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i * n + i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j);
      total += m(i, j) * m(i, j);
    }
  }
  const double threshold = tol * std::sqrt(total);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

  EigenDecomposition out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t idx : order) {
    out.values.push_back(a[idx * n + idx]);
    Vector col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + idx];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

std::vector<Vector> orthonormal_basis(const std::vector<Vector>& vectors, double tol) {
  std::vector<Vector> basis;
  for (const auto& input : vectors) {
    const double original = norm2(input);
    if (original == 0.0) continue;
    Vector r = input;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const double d = dot(r, q);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= d * q[i];
      }
    }
    const double residual = norm2(r);
    if (residual <= tol * original) continue;
    basis.push_back(scaled(r, 1.0 / residual));
  }
  return basis;
}

bool is_affinely_independent(const std::vector<Vector>& points, double tol) {
  if (points.size() <= 1) return true;
  const std::size_t dim = points.front().size();
  const std::size_t j = points.size() - 1;
  if (j > dim) return false;

  std::vector<Vector> diffs;
  diffs.reserve(j);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(subtract(points[i], points[0]));

  // Gram matrix D D^T has the squared singular values of D as eigenvalues.
  SymmetricMatrix gram(j);
  for (std::size_t r = 0; r < j; ++r)
    for (std::size_t c = r; c < j; ++c) gram.set(r, c, dot(diffs[r], diffs[c]));
  const auto eig = jacobi_eigenvalues(gram);
  const double smax = std::sqrt(std::max(0.0, eig.values.back()));
  const double smin = std::sqrt(std::max(0.0, eig.values.front()));
  return smin > tol * std::max(1.0, smax);
}

std::optional<Vector> solve_linear_system(std::vector<Vector> a, Vector b, double pivot_tol) {
  const std::size_t n = b.size();
  double scale = 0.0;
  for (const auto& row : a)
    for (double v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return n == 0 ? std::optional<Vector>(Vector{}) : std::nullopt;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) <= pivot_tol * scale) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  Vector x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

std::optional<Vector> least_squares(const std::vector<Vector>& a, const Vector& b) {
  if (a.empty()) return std::nullopt;
  const std::size_t cols = a.front().size();
  std::vector<Vector> ata(cols, Vector(cols, 0.0));
  Vector atb(cols, 0.0);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t i = 0; i < cols; ++i) {
      atb[i] += a[r][i] * b[r];
      for (std::size_t j = 0; j < cols; ++j) ata[i][j] += a[r][i] * a[r][j];
    }
  }
  return solve_linear_system(std::move(ata), std::move(atb), 1e-13);
}

std::vector<Vector> sphere_samples(const SphereSampler& s) {
  if (s.dim == 0) throw DomainError("sphere sampler dimension must be at least 1");
  if (s.count == 0) throw DomainError("sphere sampler count must be at least 1");
  std::vector<Vector> out;
  out.reserve(s.count);

  if (s.mode == SphereMode::Equiangular2d) {
    if (s.dim != 2) throw DomainError("equiangular sampling requires dimension 2");
    for (std::size_t j = 0; j < s.count; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(s.count);
      out.push_back({std::cos(theta), std::sin(theta)});
    }
    return out;
  }

  std::mt19937_64 rng(s.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (out.size() < s.count) {
    Vector v(s.dim);
    for (double& c : v) c = gauss(rng);
    const double n = norm2(v);
    if (n < 1e-8) continue;
    out.push_back(scaled(v, 1.0 / n));
  }
  return out;
}

double sphere_surface_measure(std::size_t k) {
  const double half = 0.5 * static_cast<double>(k);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

}  // namespace diversity
