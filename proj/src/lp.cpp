#include "diversity/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "diversity/errors.hpp"

namespace diversity::lp {

namespace {

// Dense tableau: `rows` constraint rows followed by the objective row. Columns are
// the structural variables, one artificial per row, then the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t structural)
      : m_(rows), n_(structural), width_(structural + rows + 1),
        data_((rows + 1) * width_, 0.0), basis_(rows) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * width_ + c]; }
  double& rhs(std::size_t r) { return at(r, width_ - 1); }
  double rhs(std::size_t r) const { return at(r, width_ - 1); }
  double& cost(std::size_t c) { return at(m_, c); }
  double cost(std::size_t c) const { return at(m_, c); }

  std::size_t rows() const { return m_; }
  std::size_t structural() const { return n_; }
  std::size_t width() const { return width_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    double* prow = &data_[pr * width_];
    const double inv = 1.0 / prow[pc];
    for (std::size_t c = 0; c < width_; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == pr) continue;
      double* row = &data_[r * width_];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width_; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

enum class StepResult { Optimal, Unbounded };

// Runs Bland's-rule iterations; only columns below `allowed` may enter.
StepResult run_simplex(Tableau& t, std::size_t allowed, const SimplexOptions& opts) {
  const std::size_t m = t.rows();
  const std::size_t max_iters = 50000 + 100 * (m + t.width());
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    std::size_t enter = allowed;
    for (std::size_t c = 0; c < allowed; ++c) {
      if (t.cost(c) < -opts.optimality_tol) {
        enter = c;
        break;
      }
    }
    if (enter == allowed) return StepResult::Optimal;

    std::size_t leave = m;
    double best = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double a = t.at(r, enter);
      if (a <= opts.pivot_tol) continue;
      const double ratio = std::max(0.0, t.rhs(r)) / a;
      if (leave == m) {
        leave = r;
        best = ratio;
        continue;
      }
      const double slack = 1e-12 * (1.0 + std::abs(best));
      if (ratio < best - slack) {
        leave = r;
        best = ratio;
      } else if (ratio <= best + slack && t.basis()[r] < t.basis()[leave]) {
        leave = r;
        best = std::min(best, ratio);
      }
    }
    if (leave == m) return StepResult::Unbounded;
    t.pivot(leave, enter);
  }
  throw std::runtime_error("simplex iteration limit exceeded");
}

}  // namespace

StandardOutcome solve_standard(const StandardLP& p, const SimplexOptions& opts) {
  const std::size_t m = p.rows.size();
  const std::size_t n = p.objective.size();
  if (p.rhs.size() != m) throw DomainError("standard LP: rhs length mismatch");
  for (const auto& row : p.rows) {
    if (row.size() != n) throw DomainError("standard LP: row length mismatch");
  }

  Tableau t(m, n);
  std::vector<double> sign(m, 1.0);
  double rhs_scale = 1.0;
  for (std::size_t r = 0; r < m; ++r) {
    sign[r] = p.rhs[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = sign[r] * p.rows[r][c];
    t.at(r, n + r) = 1.0;
    t.rhs(r) = sign[r] * p.rhs[r];
    t.basis()[r] = n + r;
    rhs_scale = std::max(rhs_scale, std::abs(p.rhs[r]));
  }

  // Phase 1: minimize the sum of artificials.
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += t.at(r, c);
    t.cost(c) = -s;
  }
  double total = 0.0;
  for (std::size_t r = 0; r < m; ++r) total += t.rhs(r);
  t.rhs(m) = -total;

  run_simplex(t, n + m, opts);
  StandardOutcome out;
  if (-t.rhs(m) > opts.feasibility_tol * rhs_scale) {
    out.status = Status::Infeasible;
    return out;
  }

  // Drive basic artificials out where a structural pivot exists.
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < n) continue;
    std::size_t best = n;
    double mag = opts.pivot_tol;
    for (std::size_t c = 0; c < n; ++c) {
      if (std::abs(t.at(r, c)) > mag) {
        mag = std::abs(t.at(r, c));
        best = c;
      }
    }
    if (best < n) t.pivot(r, best);
  }

  auto extract_point = [&] {
    Vector z(n, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < n) z[t.basis()[r]] = std::max(0.0, t.rhs(r));
    }
    return z;
  };

  if (opts.phase_one_only) {
    out.status = Status::Optimal;
    out.point = extract_point();
    out.value = dot(p.objective, out.point);
    return out;
  }

  // Phase 2: price out the basis against the true objective.
  for (std::size_t c = 0; c < t.width(); ++c) t.cost(c) = c < n ? p.objective[c] : 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t b = t.basis()[r];
    const double cb = b < n ? p.objective[b] : 0.0;
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c < t.width(); ++c) t.cost(c) -= cb * t.at(r, c);
  }

  if (run_simplex(t, n, opts) == StepResult::Unbounded) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.point = extract_point();
  out.value = dot(p.objective, out.point);
  out.multipliers.resize(m);
  for (std::size_t r = 0; r < m; ++r) out.multipliers[r] = -t.cost(n + r) * sign[r];
  return out;
}

namespace {

void validate(const LPProblem& p) {
  const std::size_t n = p.num_variables();
  if (p.inequality_rows.size() != p.inequality_rhs.size())
    throw DomainError("LP: inequality rhs length mismatch");
  if (p.equality_rows.size() != p.equality_rhs.size())
    throw DomainError("LP: equality rhs length mismatch");
  for (const auto& row : p.inequality_rows)
    if (row.size() != n) throw DomainError("LP: inequality row length mismatch");
  for (const auto& row : p.equality_rows)
    if (row.size() != n) throw DomainError("LP: equality row length mismatch");
}

LPOutcome solve_direct(const LPProblem& p) {
  const std::size_t n = p.num_variables();
  const std::size_t mi = p.inequality_rows.size();
  const std::size_t me = p.equality_rows.size();

  StandardLP s;
  s.objective.assign(2 * n + mi, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    s.objective[v] = p.objective[v];
    s.objective[n + v] = -p.objective[v];
  }
  for (std::size_t i = 0; i < mi; ++i) {
    Vector row(2 * n + mi, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      row[v] = p.inequality_rows[i][v];
      row[n + v] = -p.inequality_rows[i][v];
    }
    row[2 * n + i] = 1.0;
    s.rows.push_back(std::move(row));
    s.rhs.push_back(p.inequality_rhs[i]);
  }
  for (std::size_t e = 0; e < me; ++e) {
    Vector row(2 * n + mi, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      row[v] = p.equality_rows[e][v];
      row[n + v] = -p.equality_rows[e][v];
    }
    s.rows.push_back(std::move(row));
    s.rhs.push_back(p.equality_rhs[e]);
  }

  const auto r = solve_standard(s);
  LPOutcome out;
  out.status = r.status;
  if (r.status != Status::Optimal) return out;
  out.point.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.point[v] = r.point[v] - r.point[n + v];
  out.value = dot(p.objective, out.point);
  return out;
}

// Dual of min c.z, Gz <= h, Ez = f (z free):
//   min h.y + f.(w+ - w-)  s.t.  G^T y + E^T (w+ - w-) = -c,  y, w+, w- >= 0.
// Its simplex multipliers are a primal optimum.
StandardLP dual_standard_form(const LPProblem& p, bool zero_objective) {
  const std::size_t n = p.num_variables();
  const std::size_t mi = p.inequality_rows.size();
  const std::size_t me = p.equality_rows.size();
  StandardLP s;
  s.objective.assign(mi + 2 * me, 0.0);
  for (std::size_t i = 0; i < mi; ++i) s.objective[i] = p.inequality_rhs[i];
  for (std::size_t e = 0; e < me; ++e) {
    s.objective[mi + e] = p.equality_rhs[e];
    s.objective[mi + me + e] = -p.equality_rhs[e];
  }
  s.rows.assign(n, Vector(mi + 2 * me, 0.0));
  s.rhs.assign(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < mi; ++i) s.rows[v][i] = p.inequality_rows[i][v];
    for (std::size_t e = 0; e < me; ++e) {
      s.rows[v][mi + e] = p.equality_rows[e][v];
      s.rows[v][mi + me + e] = -p.equality_rows[e][v];
    }
    s.rhs[v] = zero_objective ? 0.0 : -p.objective[v];
  }
  return s;
}

LPOutcome solve_dual(const LPProblem& p) {
  const auto r = solve_standard(dual_standard_form(p, false));
  LPOutcome out;
  switch (r.status) {
    case Status::Optimal:
      out.status = Status::Optimal;
      out.point = r.multipliers;
      out.value = dot(p.objective, out.point);
      return out;
    case Status::Unbounded:
      out.status = Status::Infeasible;
      return out;
    case Status::Infeasible: {
      // Primal is infeasible or unbounded; a Farkas ray of the homogeneous
      // dual decides which.
      const auto feas = solve_standard(dual_standard_form(p, true));
      out.status = feas.status == Status::Unbounded ? Status::Infeasible : Status::Unbounded;
      return out;
    }
  }
  return out;
}

}  // namespace

LPOutcome solve(const LPProblem& p, Route route) {
  validate(p);
  if (route == Route::Automatic) {
    const double n = static_cast<double>(p.num_variables());
    const double mi = static_cast<double>(p.inequality_rows.size());
    const double me = static_cast<double>(p.equality_rows.size());
    const double direct_cost = (mi + me) * (2.0 * n + 2.0 * mi + me);
    const double dual_cost = n * (mi + 2.0 * me + n);
    route = dual_cost < direct_cost ? Route::Dual : Route::Direct;
  }
  return route == Route::Dual ? solve_dual(p) : solve_direct(p);
}

bool in_convex_hull(std::span<const double> p, const PointSet& a, double tol) {
  if (a.empty()) throw DomainError("hull membership needs a nonempty point set");
  if (p.size() != a.dim()) throw DomainError("hull membership: dimension mismatch");
  const std::size_t k = a.dim();
  StandardLP s;
  s.objective.assign(a.size(), 0.0);
  for (std::size_t d = 0; d < k; ++d) {
    Vector row(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) row[i] = a[i][d];
    s.rows.push_back(std::move(row));
    s.rhs.push_back(p[d]);
  }
  s.rows.emplace_back(a.size(), 1.0);
  s.rhs.push_back(1.0);

  SimplexOptions opts;
  opts.feasibility_tol = tol;
  opts.phase_one_only = true;
  return solve_standard(s, opts).status == Status::Optimal;
}

double max_violation(const LPProblem& p, std::span<const double> z) {
  double worst = 0.0;
  for (std::size_t i = 0; i < p.inequality_rows.size(); ++i)
    worst = std::max(worst, dot(p.inequality_rows[i], z) - p.inequality_rhs[i]);
  for (std::size_t e = 0; e < p.equality_rows.size(); ++e)
    worst = std::max(worst, std::abs(dot(p.equality_rows[e], z) - p.equality_rhs[e]));
  return worst;
}

}  // namespace diversity::lp

namespace diversity::lp {

namespace {

// Andrew's monotone chain; collinear boundary points are not vertices.
PointSet planar_hull_vertices(const PointSet& a) {
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a[i] < a[j]; });
  auto cross = [&](std::size_t o, std::size_t p, std::size_t q) {
    return (a[p][0] - a[o][0]) * (a[q][1] - a[o][1]) - (a[p][1] - a[o][1]) * (a[q][0] - a[o][0]);
  };
  std::vector<std::size_t> chain(2 * order.size());
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], i) <= 0.0) --k;
    chain[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (std::size_t r = order.size() - 1; r-- > 0;) {
    const std::size_t i = order[r];
    while (k >= lower && cross(chain[k - 2], chain[k - 1], i) <= 0.0) --k;
    chain[k++] = i;
  }
  std::vector<bool> keep(a.size(), false);
  for (std::size_t i = 0; i + 1 < k; ++i) keep[chain[i]] = true;
  PointSet out(2);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (keep[i]) out.push_back(a[i]);
  return out;
}

}  // namespace

PointSet hull_vertices(const PointSet& a, double tol) {
  PointSet current = a.deduplicated();
  if (current.size() <= 2) return current;
  if (current.dim() == 2) return planar_hull_vertices(current);
  for (std::size_t i = current.size(); i-- > 0;) {
    if (current.size() <= 2) break;
    const PointSet others = without_point(current, i);
    if (in_convex_hull(current[i], others, tol)) current = others;
  }
  return current;
}

}  // namespace diversity::lp
