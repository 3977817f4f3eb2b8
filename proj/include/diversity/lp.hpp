#pragma once

#include <cstddef>
#include <vector>

#include "diversity/geometry.hpp"

namespace diversity::lp {

inline constexpr double kPivotTolerance = 1e-11;
inline constexpr double kFeasibilityTolerance = 1e-9;

/// minimize c.z subject to G z <= h and E z = f, with every variable free.
struct LPProblem {
  Vector objective;
  std::vector<Vector> inequality_rows;
  Vector inequality_rhs;
  std::vector<Vector> equality_rows;
  Vector equality_rhs;

  std::size_t num_variables() const noexcept { return objective.size(); }
};

/// minimize c.z subject to A z = b and z >= 0.
struct StandardLP {
  Vector objective;
  std::vector<Vector> rows;
  Vector rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct LPOutcome {
  Status status = Status::Infeasible;
  double value = 0.0;   // meaningful when optimal
  Vector point;         // meaningful when optimal
};

struct StandardOutcome {
  Status status = Status::Infeasible;
  double value = 0.0;
  Vector point;
  /// Simplex multipliers of the equality rows at the optimum (the dual solution).
  Vector multipliers;
};

struct SimplexOptions {
  double feasibility_tol = kFeasibilityTolerance;
  double optimality_tol = kFeasibilityTolerance;
  double pivot_tol = kPivotTolerance;
  bool phase_one_only = false;
};

/// Two-phase tableau simplex with Bland's rule.
StandardOutcome solve_standard(const StandardLP& p, const SimplexOptions& opts = {});

enum class Route {
  Automatic,  // whichever tableau is smaller
  Direct,     // z = z+ - z-, slacks on G rows
  Dual,       // simplex on the LP dual; the primal point is read from its multipliers
};

/// Throws DomainError when row lengths disagree with the objective.
LPOutcome solve(const LPProblem& p, Route route = Route::Automatic);

/// True iff p is a convex combination of the points of A, decided by phase-1
/// feasibility at `tol`.
bool in_convex_hull(std::span<const double> p, const PointSet& a, double tol = 1e-9);

/// Points of A that are not convex combinations of the other points, in input
/// order. Planar sets use a monotone chain; otherwise every membership decision
/// is one small phase-1 LP.
PointSet hull_vertices(const PointSet& a, double tol = 1e-12);

/// Max violation of G z <= h and E z = f at `z` (0 when feasible).
double max_violation(const LPProblem& p, std::span<const double> z);

}  // namespace diversity::lp
