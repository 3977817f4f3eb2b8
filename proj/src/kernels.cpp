#include "diversity/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "diversity/errors.hpp"
#include "diversity/lp.hpp"
#include "diversity/numerics.hpp"

namespace diversity {

namespace {

constexpr double kUnitTolerance = 1e-10;
constexpr double kBalanceTolerance = 1e-9;
constexpr double kAffineTolerance = 1e-9;

}  // namespace

HPolytope::HPolytope(std::vector<Vector> normals, Vector offsets)
    : normals_(std::move(normals)), offsets_(std::move(offsets)) {
  if (normals_.empty()) throw DomainError("kernel needs at least one halfspace");
  if (normals_.size() != offsets_.size())
    throw DomainError("kernel normals and offsets differ in length");
  const std::size_t k = normals_.front().size();
  if (k == 0) throw DomainError("kernel dimension must be at least 1");
  for (std::size_t l = 0; l < normals_.size(); ++l) {
    if (normals_[l].size() != k) throw DomainError("kernel normals differ in dimension");
    for (double c : normals_[l])
      if (!std::isfinite(c)) throw DomainError("kernel normals must be finite");
    if (!(offsets_[l] > 0.0) || !std::isfinite(offsets_[l]))
      throw DomainError("kernel offsets must be positive (origin interior)");
  }
}

std::vector<Vector> HPolytope::unit_offset_normals() const {
  std::vector<Vector> out;
  out.reserve(normals_.size());
  for (std::size_t l = 0; l < normals_.size(); ++l) out.push_back(scaled(normals_[l], 1.0 / offsets_[l]));
  return out;
}

HPolytope HPolytope::linf_ball(std::size_t dim, double r) {
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < dim; ++i) {
    for (double s : {1.0, -1.0}) {
      Vector v(dim, 0.0);
      v[i] = s;
      normals.push_back(v);
    }
  }
  return HPolytope(std::move(normals), Vector(2 * dim, r));
}

HPolytope HPolytope::regular_polygon(std::size_t n) {
  if (n < 3) throw DomainError("polygon kernel needs at least 3 sides");
  std::vector<Vector> normals;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    normals.push_back({std::cos(t), std::sin(t)});
  }
  return HPolytope(std::move(normals), Vector(n, 1.0));
}

double DiscreteSphericalMeasure::total_mass() const {
  double m = 0.0;
  for (const auto& a : atoms) m += a.mass;
  return m;
}

std::vector<Vector> DiscreteSphericalMeasure::directions() const {
  std::vector<Vector> out;
  out.reserve(atoms.size());
  for (const auto& a : atoms) out.push_back(a.direction);
  return out;
}

std::string MeasureViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Empty: os << "measure has no atoms"; break;
    case Kind::DimensionMismatch: os << "atom " << atom << " has mismatched dimension"; break;
    case Kind::NonUnitAtom: os << "atom " << atom << " is not unit length (error " << magnitude << ")"; break;
    case Kind::NonPositiveMass: os << "atom " << atom << " has nonpositive mass " << magnitude; break;
    case Kind::Imbalance: os << "measure is unbalanced (|sum m u| = " << magnitude << ")"; break;
  }
  return os.str();
}

std::vector<MeasureViolation> validate_measure(const DiscreteSphericalMeasure& nu) {
  using Kind = MeasureViolation::Kind;
  std::vector<MeasureViolation> out;
  if (nu.atoms.empty()) {
    out.push_back({Kind::Empty, 0, 0.0});
    return out;
  }
  const std::size_t k = nu.dim();
  Vector moment(k, 0.0);
  double total = 0.0;
  bool dims_ok = true;
  for (std::size_t l = 0; l < nu.atoms.size(); ++l) {
    const auto& a = nu.atoms[l];
    if (a.direction.size() != k || k == 0) {
      out.push_back({Kind::DimensionMismatch, l, 0.0});
      dims_ok = false;
      continue;
    }
    const double err = std::abs(norm2(a.direction) - 1.0);
    if (!(err <= kUnitTolerance)) out.push_back({Kind::NonUnitAtom, l, err});
    if (!(a.mass > 0.0)) out.push_back({Kind::NonPositiveMass, l, a.mass});
    moment = add(moment, scaled(a.direction, a.mass));
    total += std::abs(a.mass);
  }
  if (dims_ok) {
    const double imbalance = norm2(moment);
    if (!(imbalance <= kBalanceTolerance * total)) out.push_back({Kind::Imbalance, 0, imbalance});
  }
  return out;
}

void require_valid_measure(const DiscreteSphericalMeasure& nu) {
  const auto violations = validate_measure(nu);
  if (violations.empty()) return;
  std::string msg = "invalid measure:";
  for (const auto& v : violations) msg += " " + v.describe() + ";";
  throw PreconditionError(msg);
}

HPolytope SimplexKernelSpec::kernel() const {
  return HPolytope(normals, Vector(normals.size(), 1.0));
}

void validate_simplex_spec(const SimplexKernelSpec& spec) {
  if (spec.normals.empty()) throw PreconditionError("simplex spec has no normals");
  if (spec.weights.size() != spec.normals.size())
    throw PreconditionError("simplex spec weights and normals differ in length");
  const std::size_t k = spec.dim();
  double scale = 1.0;
  for (const auto& v : spec.normals) {
    if (v.size() != k || k == 0) throw PreconditionError("simplex spec normals differ in dimension");
    scale = std::max(scale, norm2(v));
  }
  double sum = 0.0;
  Vector centre(k, 0.0);
  for (std::size_t l = 0; l < spec.normals.size(); ++l) {
    if (!(spec.weights[l] >= 0.0)) throw PreconditionError("simplex spec weights must be nonnegative");
    sum += spec.weights[l];
    centre = add(centre, scaled(spec.normals[l], spec.weights[l]));
  }
  if (std::abs(sum - 1.0) > 1e-9) throw PreconditionError("simplex spec weights must sum to 1");
  if (norm2(centre) > 1e-9 * scale)
    throw PreconditionError("simplex spec weighted normals must sum to 0");
  if (!is_affinely_independent(spec.normals, kAffineTolerance))
    throw PreconditionError("not extremal: simplex spec normals are affinely dependent");
}

HPolytope kernel_from_measure(const DiscreteSphericalMeasure& nu) {
  require_valid_measure(nu);
  if (!is_affinely_independent(nu.directions(), kAffineTolerance))
    throw PreconditionError("not extremal: measure support is affinely dependent");
  const double m = nu.total_mass();
  std::vector<Vector> normals;
  normals.reserve(nu.atoms.size());
  for (const auto& a : nu.atoms) normals.push_back(scaled(a.direction, m));
  return HPolytope(std::move(normals), Vector(nu.atoms.size(), 1.0));
}

SimplexKernelSpec simplex_spec_from_kernel(const HPolytope& k) {
  auto v = k.unit_offset_normals();
  if (!is_affinely_independent(v, kAffineTolerance))
    throw PreconditionError("not extremal: kernel normals are affinely dependent");
  const std::size_t dim = k.dim();
  if (!lp::in_convex_hull(Vector(dim, 0.0), PointSet(dim, v)))
    throw PreconditionError("kernel slice unbounded: origin is not in the convex hull of the normals");

  // [v_0 ... v_j; 1 ... 1] c = [0; 1]; full column rank by affine independence.
  std::vector<Vector> system(dim + 1, Vector(v.size(), 0.0));
  for (std::size_t l = 0; l < v.size(); ++l) {
    for (std::size_t d = 0; d < dim; ++d) system[d][l] = v[l][d];
    system[dim][l] = 1.0;
  }
  Vector rhs(dim + 1, 0.0);
  rhs[dim] = 1.0;
  auto c = least_squares(system, rhs);
  if (!c) throw PreconditionError("not extremal: kernel normals are affinely dependent");
  double sum = 0.0;
  for (double& x : *c) sum += (x = std::max(0.0, x));
  for (double& x : *c) x /= sum;
  return SimplexKernelSpec{std::move(v), std::move(*c)};
}

DiscreteSphericalMeasure measure_from_simplex_kernel(const HPolytope& k) {
  const auto spec = simplex_spec_from_kernel(k);
  DiscreteSphericalMeasure nu;
  for (std::size_t l = 0; l < spec.normals.size(); ++l) {
    const double len = norm2(spec.normals[l]);
    const double mass = spec.weights[l] * len;
    if (mass <= 1e-12 * len) continue;
    nu.atoms.push_back({scaled(spec.normals[l], 1.0 / len), mass});
  }
  return nu;
}

DiscreteSphericalMeasure l1_measure(std::size_t k) {
  if (k == 0) throw DomainError("l1 measure dimension must be at least 1");
  DiscreteSphericalMeasure nu;
  for (std::size_t i = 0; i < k; ++i) {
    for (double s : {1.0, -1.0}) {
      Vector e(k, 0.0);
      e[i] = s;
      nu.atoms.push_back({e, 1.0});
    }
  }
  return nu;
}

}  // namespace diversity
