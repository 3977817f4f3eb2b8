#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "diversity/geometry.hpp"

namespace diversity {

/// Dense symmetric matrix. Input is symmetrized as (M + M^T) / 2 on construction,
/// so entries(i, j) == entries(j, i) holds exactly.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n);
  explicit SymmetricMatrix(const std::vector<Vector>& rows);

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v);
  double max_abs() const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

struct EigenDecomposition {
  Vector values;                 // ascending
  std::vector<Vector> vectors;   // vectors[i] pairs with values[i]; orthonormal
};

/// Cyclic Jacobi rotations. Sweeps stop once the off-diagonal Frobenius norm
/// falls below `tol` times the Frobenius norm of the input.
EigenDecomposition jacobi_eigenvalues(const SymmetricMatrix& m, double tol = 1e-11);

/// Modified Gram-Schmidt with one re-orthogonalization pass. A vector is dropped
/// when its residual norm is at most `tol` times its original norm.
std::vector<Vector> orthonormal_basis(const std::vector<Vector>& vectors, double tol = 1e-10);

/// True iff p_i - p_0 (i >= 1) are linearly independent: the smallest singular
/// value of the difference matrix exceeds tol * max(1, largest singular value).
bool is_affinely_independent(const std::vector<Vector>& points, double tol = 1e-9);

/// Solves the square system a x = b by Gaussian elimination with partial pivoting.
/// Returns nullopt when a pivot falls below `pivot_tol` relative to the largest entry.
std::optional<Vector> solve_linear_system(std::vector<Vector> a, Vector b,
                                          double pivot_tol = 1e-14);

/// Least-squares solution of a x = b (a is rows x cols, rows >= cols) through the
/// normal equations. Returns nullopt when a is rank deficient.
std::optional<Vector> least_squares(const std::vector<Vector>& a, const Vector& b);

enum class SphereMode { UniformRandom, Equiangular2d };

/// Direction set used as a quadrature proxy for the uniform measure on S^{dim-1}.
struct SphereSampler {
  std::size_t dim = 2;
  SphereMode mode = SphereMode::Equiangular2d;
  std::size_t count = 360;
  std::uint64_t seed = 0;  // only used by UniformRandom

  static SphereSampler equiangular(std::size_t n) {
    return SphereSampler{2, SphereMode::Equiangular2d, n, 0};
  }
  static SphereSampler uniform(std::size_t dim, std::size_t n, std::uint64_t seed) {
    return SphereSampler{dim, SphereMode::UniformRandom, n, seed};
  }
};

/// Unit vectors from the sampler. Uniform mode normalizes Gaussian draws from a
/// generator seeded with `seed`; equiangular mode emits angles 2 pi j / n.
std::vector<Vector> sphere_samples(const SphereSampler& s);

/// Surface measure of S^{k-1}: 2 pi^{k/2} / Gamma(k/2).
double sphere_surface_measure(std::size_t k);

}  // namespace diversity
