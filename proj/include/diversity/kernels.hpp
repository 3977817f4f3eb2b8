#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diversity/geometry.hpp"

namespace diversity {

/// Kernel K = {y : normals[l] . y <= offsets[l]} of a Minkowski diversity.
/// Offsets are strictly positive, so the origin is interior. K may be unbounded.
class HPolytope {
 public:
  HPolytope(std::vector<Vector> normals, Vector offsets);

  std::size_t dim() const noexcept { return normals_.front().size(); }
  const std::vector<Vector>& normals() const noexcept { return normals_; }
  const Vector& offsets() const noexcept { return offsets_; }

  /// Normals scaled so every offset is 1.
  std::vector<Vector> unit_offset_normals() const;

  /// {y : |y_i| <= r}.
  static HPolytope linf_ball(std::size_t dim, double r = 1.0);
  /// Circumscribed regular n-gon of the unit disk (n >= 3).
  static HPolytope regular_polygon(std::size_t n);

 private:
  std::vector<Vector> normals_;
  Vector offsets_;
};

struct Atom {
  Vector direction;  // unit vector
  double mass = 0.0;
};

/// Finite measure on the unit sphere with balanced first moment.
struct DiscreteSphericalMeasure {
  std::vector<Atom> atoms;

  std::size_t dim() const { return atoms.empty() ? 0 : atoms.front().direction.size(); }
  double total_mass() const;
  std::vector<Vector> directions() const;
};

struct MeasureViolation {
  enum class Kind { Empty, DimensionMismatch, NonUnitAtom, NonPositiveMass, Imbalance };
  Kind kind;
  std::size_t atom = 0;     // offending atom, when applicable
  double magnitude = 0.0;   // | |u| - 1 |, the mass, or | sum m u |
  std::string describe() const;
};

/// Every violated invariant: unit atoms (1e-10), positive masses, and
/// |sum m_l u_l| <= 1e-9 * sum m_l.
std::vector<MeasureViolation> validate_measure(const DiscreteSphericalMeasure& nu);

/// Throws PreconditionError listing the violations, if any.
void require_valid_measure(const DiscreteSphericalMeasure& nu);

/// Normals v_l with weights c_l >= 0, sum c_l = 1, sum c_l v_l = 0, v_l affinely
/// independent. Evaluates as sum_l c_l h_A(v_l), the Minkowski diversity of
/// {y : v_l . y <= 1}.
struct SimplexKernelSpec {
  std::vector<Vector> normals;
  Vector weights;

  std::size_t dim() const { return normals.empty() ? 0 : normals.front().size(); }
  HPolytope kernel() const;
};

/// Throws PreconditionError when the spec breaks one of its invariants.
void validate_simplex_spec(const SimplexKernelSpec& spec);

/// With m = sum m_l, returns {y : (m u_l) . y <= 1}. Requires a balanced measure
/// with affinely independent atoms ("not extremal" otherwise).
HPolytope kernel_from_measure(const DiscreteSphericalMeasure& nu);

/// Inverse construction for kernels whose unit-offset normals are affinely
/// independent with the origin in their convex hull. Atoms carrying zero weight
/// (origin on a face of the hull) are dropped.
DiscreteSphericalMeasure measure_from_simplex_kernel(const HPolytope& k);

/// Weights c of the unit-offset normals: sum c v = 0, sum c = 1, c >= 0.
SimplexKernelSpec simplex_spec_from_kernel(const HPolytope& k);

/// Atoms +-e_i with unit mass; induces the l1 diversity.
DiscreteSphericalMeasure l1_measure(std::size_t k);

}  // namespace diversity
