#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diversity/diversity.hpp"

namespace diversity {

/// Sampling parameters shared by every check. Coordinates are uniform in
/// [coord_lo, coord_hi], set sizes uniform in [min_size, max_size], scale
/// factors uniform in [0, lambda_hi].
struct CheckConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::size_t dim = 2;  // used when the spec does not fix one
  std::size_t min_size = 0;
  std::size_t max_size = 8;
  double coord_lo = -10.0;
  double coord_hi = 10.0;
  double lambda_hi = 3.0;
  /// Comparisons pass when lhs <= rhs + tol * max(1, |lhs|, |rhs|).
  double tol = 1e-8;
};

/// The inputs and both sides of the first failing comparison.
struct Witness {
  std::string relation;  // e.g. "delta(A+B) <= delta(A) + delta(B)"
  std::size_t trial = 0; // 0-based; fixed probes run before the random trials
  std::vector<std::pair<std::string, PointSet>> sets;
  std::vector<std::pair<std::string, double>> scalars;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CheckReport {
  std::string property;
  bool pass = true;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  /// Largest lhs - rhs over every inequality (and |lhs - rhs| over every
  /// equality); negative when every inequality is slack.
  double worst_excess = -std::numeric_limits<double>::infinity();
  std::optional<Witness> witness;
};

/// D1 on empty sets and singletons, nonnegativity, D2, D3 and D4.
CheckReport check_axioms(const SetFunction& f, std::size_t dim, const CheckConfig& cfg);
/// delta(A+B) <= delta(A) + delta(B) and delta(lambda A) = lambda delta(A) for
/// nonempty A, B (A + {} is empty).
CheckReport check_sublinear(const SetFunction& f, std::size_t dim, const CheckConfig& cfg);
/// delta(A+B) = delta(A) + delta(B) and homogeneity. Planar probes (two
/// orthogonal unit segments; a triangle and its reflection) run first, and
/// every fourth random trial uses B = -A.
CheckReport check_linear(const SetFunction& f, std::size_t dim, const CheckConfig& cfg);
/// delta(A + t) = delta(A), and delta(A) is unchanged by adding convex
/// combinations of A.
CheckReport check_translation_and_hull_invariance(const SetFunction& f, std::size_t dim,
                                                  const CheckConfig& cfg);
/// delta(A) <= (n-1)/(n(n-2)) sum_a delta(A - a) for 3 <= |A| <= 7.
CheckReport check_deletion_inequality(const SetFunction& f, std::size_t dim, const CheckConfig& cfg);
/// |delta(A + lambda Q) - delta(A)| <= lambda delta(P) in the plane, Q the
/// regular 64-gon inscribed in the unit circle and P the circumscribed one.
/// Throws PreconditionError when dim != 2.
CheckReport check_lipschitz(const SetFunction& f, std::size_t dim, const CheckConfig& cfg);
/// delta(K & L) + delta(K | L) = delta(K) + delta(L) on pairs of axis-aligned
/// rectangles whose union is a rectangle, given by their corners. Meaningful
/// for linear diversities only. Throws PreconditionError when dim != 2.
CheckReport check_valuation_boxes(const SetFunction& f, std::size_t dim, const CheckConfig& cfg);

/// Spec overloads: dimension from the spec when it fixes one, else cfg.dim.
CheckReport check_axioms(const DiversitySpec& spec, const CheckConfig& cfg);
CheckReport check_sublinear(const DiversitySpec& spec, const CheckConfig& cfg);
CheckReport check_linear(const DiversitySpec& spec, const CheckConfig& cfg);
CheckReport check_translation_and_hull_invariance(const DiversitySpec& spec, const CheckConfig& cfg);
CheckReport check_deletion_inequality(const DiversitySpec& spec, const CheckConfig& cfg);
CheckReport check_lipschitz(const DiversitySpec& spec, const CheckConfig& cfg);
CheckReport check_valuation_boxes(const DiversitySpec& spec, const CheckConfig& cfg);

/// Named suites: axioms, sublinear, linear, invariance, deletion, lipschitz,
/// valuation, or all. "all" runs axioms, invariance, deletion and sublinear,
/// adds linear and valuation when the spec is linear, and lipschitz in the
/// plane. Throws ParseError on an unknown name.
std::vector<CheckReport> run_suite(const DiversitySpec& spec, const std::string& suite,
                                   const CheckConfig& cfg);
const std::vector<std::string>& suite_names();

/// max_j |h_A(x_j) - h_B(x_j)| over unit directions x_j: a lower bound on the
/// Hausdorff distance between conv(A) and conv(B).
double hausdorff_lower_estimate(const PointSet& a, const PointSet& b,
                                const std::vector<Vector>& directions);

/// Vertices of the regular n-gon inscribed in (outer = false) or circumscribed
/// about (outer = true) the unit circle. The outer polygon's edges touch the
/// circle at angles 2 pi j / n.
PointSet ball_polygon(std::size_t n, bool outer);

}  // namespace diversity
