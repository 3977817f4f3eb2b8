#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diversity/geometry.hpp"
#include "diversity/kernels.hpp"
#include "diversity/numerics.hpp"

namespace diversity {

enum class Norm { L1, L2, Linf };

class DiversitySpec;

namespace spec {

struct Diameter {
  Norm norm = Norm::L2;
};
struct L1 {};
struct Circumradius {};
struct Minkowski {
  HPolytope kernel;
};
struct SimplexClosedForm {
  SimplexKernelSpec simplex;
};
struct DiscreteLinear {
  DiscreteSphericalMeasure measure;
};
struct MeanWidth {
  SphereSampler sampler;
};
struct MeanWidthP {
  double p = 1.0;
  SphereSampler sampler;
};
struct Zonotope {
  std::vector<Vector> directions;
};
struct WeightedSum {
  std::vector<double> weights;
  std::vector<DiversitySpec> terms;
};
struct MaxOf {
  std::vector<DiversitySpec> terms;
};

}  // namespace spec

/// A diversity on R^k, as a tagged union of the implemented families.
/// Construct through the static factories; they validate the payload.
class DiversitySpec {
 public:
  using Variant = std::variant<spec::Diameter, spec::L1, spec::Circumradius, spec::Minkowski,
                               spec::SimplexClosedForm, spec::DiscreteLinear, spec::MeanWidth,
                               spec::MeanWidthP, spec::Zonotope, spec::WeightedSum, spec::MaxOf>;

  static DiversitySpec diameter(Norm norm);
  static DiversitySpec l1();
  static DiversitySpec circumradius();
  static DiversitySpec minkowski(HPolytope kernel);
  static DiversitySpec simplex_closed_form(SimplexKernelSpec simplex);
  static DiversitySpec discrete_linear(DiscreteSphericalMeasure measure);
  static DiversitySpec mean_width(SphereSampler sampler);
  static DiversitySpec mean_width_p(double p, SphereSampler sampler);
  static DiversitySpec zonotope(std::vector<Vector> directions);
  static DiversitySpec weighted_sum(std::vector<double> weights, std::vector<DiversitySpec> terms);
  static DiversitySpec max_of(std::vector<DiversitySpec> terms);

  const Variant& variant() const noexcept { return v_; }

  /// Ambient dimension fixed by the payload; nullopt for dimension-free families.
  std::optional<std::size_t> dim() const;

  /// Short type tag ("l1", "minkowski", ...), matching the JSON discriminator.
  std::string type_name() const;

  /// Minkowski-additive and positively homogeneous.
  bool is_linear() const;
  /// Minkowski-subadditive and positively homogeneous.
  bool is_sublinear() const;

 private:
  explicit DiversitySpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Any set function, e.g. a spec's evaluator or a test fixture.
using SetFunction = std::function<double(const PointSet&)>;

/// delta(A). Zero on the empty set and on singletons for every family.
/// Throws DomainError when A's dimension disagrees with the spec.
double eval(const DiversitySpec& spec, const PointSet& a);

SetFunction evaluator(const DiversitySpec& spec);

double diameter_eval(const PointSet& a, Norm norm);
double l1_eval(const PointSet& a);
double circumradius_eval(const PointSet& a);
double minkowski_eval(const PointSet& a, const HPolytope& kernel);
double simplex_closed_form_eval(const PointSet& a, const SimplexKernelSpec& simplex);
double discrete_linear_eval(const PointSet& a, const DiscreteSphericalMeasure& nu);
double mean_width_eval(const PointSet& a, const SphereSampler& sampler);
double mean_width_p_eval(const PointSet& a, double p, const SphereSampler& sampler);
double zonotope_eval(const PointSet& a, const std::vector<Vector>& directions);
double weighted_sum_eval(const PointSet& a, const spec::WeightedSum& terms);
double max_eval(const PointSet& a, const spec::MaxOf& terms);

struct Ball {
  Vector center;
  double radius = 0.0;
};

/// Smallest enclosing Euclidean ball (Welzl, move-to-front).
Ball min_enclosing_ball(const PointSet& a);

/// Optimal zonotope x + sum_j [0, t_j] u_j of a fixed-direction fit.
struct ZonotopeFit {
  double length = 0.0;
  Vector origin;            // x
  Vector segment_lengths;   // t_j
};

/// Min total length of a zonotope containing A for the fixed direction set.
/// Throws PreconditionError("directions insufficient") when the directions
/// cannot reach A's affine hull.
ZonotopeFit fit_zonotope(const PointSet& a, const std::vector<Vector>& directions);

/// Best fixed-direction value over the given directions plus `restarts` random
/// augmentations of `extra` unit directions each. Still an upper bound on the
/// direction-free zonotope diversity.
double zonotope_multistart(const PointSet& a, const std::vector<Vector>& directions,
                           std::size_t restarts, std::size_t extra, std::uint64_t seed);

/// Orthonormal bases of the null space {x : u_l . x = 0 for all l} of a discrete
/// linear semidiversity and of its orthogonal complement (the span of the atoms).
struct NullSpace {
  std::vector<Vector> basis;
  std::vector<Vector> span_basis;
};

NullSpace null_space(const DiscreteSphericalMeasure& nu);

/// Orthogonal projection of every point onto span(basis).
PointSet project(const PointSet& a, const std::vector<Vector>& basis);

/// max |delta(A) - delta(PA)| over `samples` random point sets, P the projector
/// onto the span of the atoms.
double projection_defect(const DiscreteSphericalMeasure& nu, std::size_t samples,
                         std::uint64_t seed);

/// delta*(conv(vertices)), which equals delta(vertices) for sublinear delta.
double delta_star_polytope(const DiversitySpec& spec, const PointSet& vertices);

}  // namespace diversity
