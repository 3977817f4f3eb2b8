#include "diversity/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "diversity/errors.hpp"
#include "diversity/lp.hpp"

namespace diversity {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_dim(const PointSet& a, std::size_t expected) {
  if (a.dim() != expected) {
    throw DomainError("dimension mismatch: diversity is on R^" + std::to_string(expected) +
                      ", point set is in R^" + std::to_string(a.dim()));
  }
}

double norm_distance(const Vector& a, const Vector& b, Norm norm) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    switch (norm) {
      case Norm::L1: s += d; break;
      case Norm::L2: s += d * d; break;
      case Norm::Linf: s = std::max(s, d); break;
    }
  }
  return norm == Norm::L2 ? std::sqrt(s) : s;
}

std::optional<std::size_t> common_dim(const std::vector<DiversitySpec>& terms) {
  std::optional<std::size_t> dim;
  for (const auto& t : terms) {
    const auto d = t.dim();
    if (!d) continue;
    if (dim && *dim != *d) throw DomainError("combined diversities live in different dimensions");
    dim = d;
  }
  return dim;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

DiversitySpec DiversitySpec::diameter(Norm norm) { return DiversitySpec(spec::Diameter{norm}); }
DiversitySpec DiversitySpec::l1() { return DiversitySpec(spec::L1{}); }
DiversitySpec DiversitySpec::circumradius() { return DiversitySpec(spec::Circumradius{}); }

DiversitySpec DiversitySpec::minkowski(HPolytope kernel) {
  return DiversitySpec(spec::Minkowski{std::move(kernel)});
}

DiversitySpec DiversitySpec::simplex_closed_form(SimplexKernelSpec simplex) {
  validate_simplex_spec(simplex);
  return DiversitySpec(spec::SimplexClosedForm{std::move(simplex)});
}

DiversitySpec DiversitySpec::discrete_linear(DiscreteSphericalMeasure measure) {
  require_valid_measure(measure);
  return DiversitySpec(spec::DiscreteLinear{std::move(measure)});
}

DiversitySpec DiversitySpec::mean_width(SphereSampler sampler) {
  sphere_samples(sampler);  // validates the sampler
  return DiversitySpec(spec::MeanWidth{sampler});
}

DiversitySpec DiversitySpec::mean_width_p(double p, SphereSampler sampler) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("mean-width exponent p must be >= 1");
  sphere_samples(sampler);
  return DiversitySpec(spec::MeanWidthP{p, sampler});
}

DiversitySpec DiversitySpec::zonotope(std::vector<Vector> directions) {
  if (directions.empty()) throw DomainError("zonotope needs at least one direction");
  const std::size_t k = directions.front().size();
  for (const auto& u : directions) {
    if (u.size() != k || k == 0) throw DomainError("zonotope directions differ in dimension");
    if (std::abs(norm2(u) - 1.0) > 1e-10) throw DomainError("zonotope directions must be unit vectors");
  }
  return DiversitySpec(spec::Zonotope{std::move(directions)});
}

DiversitySpec DiversitySpec::weighted_sum(std::vector<double> weights, std::vector<DiversitySpec> terms) {
  if (terms.empty()) throw DomainError("weighted sum needs at least one term");
  if (weights.size() != terms.size()) throw DomainError("weighted sum weights and terms differ in length");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("weighted sum weights must be positive");
  common_dim(terms);
  return DiversitySpec(spec::WeightedSum{std::move(weights), std::move(terms)});
}

DiversitySpec DiversitySpec::max_of(std::vector<DiversitySpec> terms) {
  if (terms.empty()) throw DomainError("max-of needs at least one term");
  common_dim(terms);
  return DiversitySpec(spec::MaxOf{std::move(terms)});
}

std::optional<std::size_t> DiversitySpec::dim() const {
  return std::visit(
      overloaded{
          [](const spec::Minkowski& s) -> std::optional<std::size_t> { return s.kernel.dim(); },
          [](const spec::SimplexClosedForm& s) -> std::optional<std::size_t> { return s.simplex.dim(); },
          [](const spec::DiscreteLinear& s) -> std::optional<std::size_t> { return s.measure.dim(); },
          [](const spec::MeanWidth& s) -> std::optional<std::size_t> { return s.sampler.dim; },
          [](const spec::MeanWidthP& s) -> std::optional<std::size_t> { return s.sampler.dim; },
          [](const spec::Zonotope& s) -> std::optional<std::size_t> { return s.directions.front().size(); },
          [](const spec::WeightedSum& s) { return common_dim(s.terms); },
          [](const spec::MaxOf& s) { return common_dim(s.terms); },
          [](const auto&) -> std::optional<std::size_t> { return std::nullopt; },
      },
      v_);
}

std::string DiversitySpec::type_name() const {
  return std::visit(overloaded{
                        [](const spec::Diameter&) { return std::string("diameter"); },
                        [](const spec::L1&) { return std::string("l1"); },
                        [](const spec::Circumradius&) { return std::string("circumradius"); },
                        [](const spec::Minkowski&) { return std::string("minkowski"); },
                        [](const spec::SimplexClosedForm&) { return std::string("simplex-closed-form"); },
                        [](const spec::DiscreteLinear&) { return std::string("discrete-linear"); },
                        [](const spec::MeanWidth&) { return std::string("mean-width"); },
                        [](const spec::MeanWidthP&) { return std::string("mean-width-p"); },
                        [](const spec::Zonotope&) { return std::string("zonotope"); },
                        [](const spec::WeightedSum&) { return std::string("weighted-sum"); },
                        [](const spec::MaxOf&) { return std::string("max-of"); },
                    },
                    v_);
}

bool DiversitySpec::is_linear() const {
  return std::visit(overloaded{
                        [](const spec::L1&) { return true; },
                        [](const spec::SimplexClosedForm&) { return true; },
                        [](const spec::DiscreteLinear&) { return true; },
                        [](const spec::MeanWidth&) { return true; },
                        [](const spec::MeanWidthP& s) { return s.p == 1.0; },
                        [](const spec::WeightedSum& s) {
                          return std::all_of(s.terms.begin(), s.terms.end(),
                                             [](const DiversitySpec& t) { return t.is_linear(); });
                        },
                        [](const spec::MaxOf& s) {
                          return s.terms.size() == 1 && s.terms.front().is_linear();
                        },
                        [](const auto&) { return false; },
                    },
                    v_);
}

bool DiversitySpec::is_sublinear() const {
  // Every implemented family is sublinear; combinators inherit from their terms.
  return std::visit(overloaded{
                        [](const spec::WeightedSum& s) {
                          return std::all_of(s.terms.begin(), s.terms.end(),
                                             [](const DiversitySpec& t) { return t.is_sublinear(); });
                        },
                        [](const spec::MaxOf& s) {
                          return std::all_of(s.terms.begin(), s.terms.end(),
                                             [](const DiversitySpec& t) { return t.is_sublinear(); });
                        },
                        [](const auto&) { return true; },
                    },
                    v_);
}

// ---------------------------------------------------------------------------
// Evaluation

double eval(const DiversitySpec& s, const PointSet& a) {
  if (const auto d = s.dim()) require_dim(a, *d);
  const PointSet pts = a.deduplicated();
  if (pts.size() <= 1) return 0.0;
  return std::visit(
      overloaded{
          [&](const spec::Diameter& v) { return diameter_eval(pts, v.norm); },
          [&](const spec::L1&) { return l1_eval(pts); },
          [&](const spec::Circumradius&) { return circumradius_eval(pts); },
          [&](const spec::Minkowski& v) { return minkowski_eval(pts, v.kernel); },
          [&](const spec::SimplexClosedForm& v) { return simplex_closed_form_eval(pts, v.simplex); },
          [&](const spec::DiscreteLinear& v) { return discrete_linear_eval(pts, v.measure); },
          [&](const spec::MeanWidth& v) { return mean_width_eval(pts, v.sampler); },
          [&](const spec::MeanWidthP& v) { return mean_width_p_eval(pts, v.p, v.sampler); },
          [&](const spec::Zonotope& v) { return zonotope_eval(pts, v.directions); },
          [&](const spec::WeightedSum& v) { return weighted_sum_eval(pts, v); },
          [&](const spec::MaxOf& v) { return max_eval(pts, v); },
      },
      s.variant());
}

SetFunction evaluator(const DiversitySpec& spec) {
  return [spec](const PointSet& a) { return eval(spec, a); };
}

double diameter_eval(const PointSet& a, Norm norm) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) best = std::max(best, norm_distance(a[i], a[j], norm));
  return best;
}

double l1_eval(const PointSet& a) {
  if (a.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t d = 0; d < a.dim(); ++d) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& p : a.points()) {
      lo = std::min(lo, p[d]);
      hi = std::max(hi, p[d]);
    }
    total += hi - lo;
  }
  return total;
}

double circumradius_eval(const PointSet& a) {
  if (a.size() <= 1) return 0.0;
  return min_enclosing_ball(a).radius;
}

double minkowski_eval(const PointSet& a, const HPolytope& kernel) {
  require_dim(a, kernel.dim());
  const PointSet pts = a.deduplicated();
  if (pts.size() <= 1) return 0.0;
  const std::size_t k = pts.dim();

  // Variables (lambda, x): v.a - v.x - lambda b <= 0 for every point and facet,
  // plus lambda >= 0.
  lp::LPProblem p;
  p.objective.assign(k + 1, 0.0);
  p.objective[0] = 1.0;
  for (const auto& pt : pts.points()) {
    for (std::size_t l = 0; l < kernel.normals().size(); ++l) {
      const auto& v = kernel.normals()[l];
      Vector row(k + 1);
      row[0] = -kernel.offsets()[l];
      for (std::size_t d = 0; d < k; ++d) row[d + 1] = -v[d];
      p.inequality_rows.push_back(std::move(row));
      p.inequality_rhs.push_back(-dot(v, pt));
    }
  }
  Vector nonneg(k + 1, 0.0);
  nonneg[0] = -1.0;
  p.inequality_rows.push_back(std::move(nonneg));
  p.inequality_rhs.push_back(0.0);

  const auto out = lp::solve(p);
  if (out.status != lp::Status::Optimal) {
    throw std::runtime_error("Minkowski LP did not reach an optimum");
  }
  return std::max(0.0, out.value);
}

double simplex_closed_form_eval(const PointSet& a, const SimplexKernelSpec& simplex) {
  require_dim(a, simplex.dim());
  if (a.size() <= 1) return 0.0;
  double total = 0.0;
  for (std::size_t l = 0; l < simplex.normals.size(); ++l)
    total += simplex.weights[l] * support(a, simplex.normals[l]);
  return std::max(0.0, total);
}

double discrete_linear_eval(const PointSet& a, const DiscreteSphericalMeasure& nu) {
  require_dim(a, nu.dim());
  if (a.size() <= 1) return 0.0;
  double total = 0.0;
  for (const auto& atom : nu.atoms) total += atom.mass * support(a, atom.direction);
  return std::max(0.0, total);
}

double mean_width_eval(const PointSet& a, const SphereSampler& sampler) {
  require_dim(a, sampler.dim);
  if (a.size() <= 1) return 0.0;
  // Widths average the support over the antipodally symmetrized samples.
  const auto xs = sphere_samples(sampler);
  double total = 0.0;
  for (const auto& x : xs) total += width(a, x);
  return total / static_cast<double>(xs.size());
}

double mean_width_p_eval(const PointSet& a, double p, const SphereSampler& sampler) {
  if (!(p >= 1.0)) throw DomainError("mean-width exponent p must be >= 1");
  require_dim(a, sampler.dim);
  if (a.size() <= 1) return 0.0;
  const auto xs = sphere_samples(sampler);
  double total = 0.0;
  for (const auto& x : xs) total += std::pow(width(a, x), p);
  const double omega = sphere_surface_measure(sampler.dim);
  return std::pow(omega * total / static_cast<double>(xs.size()), 1.0 / p) / omega;
}

ZonotopeFit fit_zonotope(const PointSet& a, const std::vector<Vector>& directions) {
  if (directions.empty()) throw DomainError("zonotope needs at least one direction");
  require_dim(a, directions.front().size());
  const PointSet pts = lp::hull_vertices(a);
  const std::size_t k = a.dim();
  const std::size_t n = pts.size();
  const std::size_t J = directions.size();
  ZonotopeFit fit;
  fit.origin = n > 0 ? pts[0] : Vector(k, 0.0);
  fit.segment_lengths.assign(J, 0.0);
  if (n <= 1) return fit;

  // Columns: t_j | mu_ij | s_ij (mu + s = t) | x+ | x-.
  const std::size_t t0 = 0, mu0 = J, s0 = J + n * J, xp0 = J + 2 * n * J, xm0 = xp0 + k;
  const std::size_t cols = xm0 + k;
  lp::StandardLP s;
  s.objective.assign(cols, 0.0);
  for (std::size_t j = 0; j < J; ++j) s.objective[t0 + j] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < k; ++d) {
      Vector row(cols, 0.0);
      for (std::size_t j = 0; j < J; ++j) row[mu0 + i * J + j] = directions[j][d];
      row[xp0 + d] = 1.0;
      row[xm0 + d] = -1.0;
      s.rows.push_back(std::move(row));
      s.rhs.push_back(pts[i][d]);
    }
    for (std::size_t j = 0; j < J; ++j) {
      Vector row(cols, 0.0);
      row[mu0 + i * J + j] = 1.0;
      row[s0 + i * J + j] = 1.0;
      row[t0 + j] = -1.0;
      s.rows.push_back(std::move(row));
      s.rhs.push_back(0.0);
    }
  }
  const auto out = lp::solve_standard(s);
  if (out.status != lp::Status::Optimal) throw PreconditionError("directions insufficient");
  for (std::size_t j = 0; j < J; ++j) fit.segment_lengths[j] = out.point[t0 + j];
  for (std::size_t d = 0; d < k; ++d) fit.origin[d] = out.point[xp0 + d] - out.point[xm0 + d];
  fit.length = std::max(0.0, out.value);
  return fit;
}

double zonotope_eval(const PointSet& a, const std::vector<Vector>& directions) {
  if (a.deduplicated().size() <= 1) {
    if (!directions.empty()) require_dim(a, directions.front().size());
    return 0.0;
  }
  return fit_zonotope(a, directions).length;
}

double zonotope_multistart(const PointSet& a, const std::vector<Vector>& directions,
                           std::size_t restarts, std::size_t extra, std::uint64_t seed) {
  double best = zonotope_eval(a, directions);
  std::mt19937_64 rng(seed);
  for (std::size_t r = 0; r < restarts; ++r) {
    SphereSampler s = SphereSampler::uniform(a.dim(), extra, rng());
    auto dirs = directions;
    for (auto& u : sphere_samples(s)) dirs.push_back(std::move(u));
    best = std::min(best, zonotope_eval(a, dirs));
  }
  return best;
}

double weighted_sum_eval(const PointSet& a, const spec::WeightedSum& terms) {
  double total = 0.0;
  for (std::size_t i = 0; i < terms.terms.size(); ++i) total += terms.weights[i] * eval(terms.terms[i], a);
  return total;
}

double max_eval(const PointSet& a, const spec::MaxOf& terms) {
  double best = 0.0;
  for (const auto& t : terms.terms) best = std::max(best, eval(t, a));
  return best;
}

// ---------------------------------------------------------------------------
// Null space and polytope extension

NullSpace null_space(const DiscreteSphericalMeasure& nu) {
  require_valid_measure(nu);
  NullSpace out;
  out.span_basis = orthonormal_basis(nu.directions());
  const std::size_t k = nu.dim();
  auto candidates = out.span_basis;
  for (std::size_t i = 0; i < k; ++i) {
    Vector e(k, 0.0);
    e[i] = 1.0;
    candidates.push_back(e);
  }
  auto full = orthonormal_basis(candidates);
  out.basis.assign(full.begin() + static_cast<std::ptrdiff_t>(out.span_basis.size()), full.end());
  return out;
}

PointSet project(const PointSet& a, const std::vector<Vector>& basis) {
  PointSet out(a.dim());
  for (const auto& p : a.points()) {
    Vector q(a.dim(), 0.0);
    for (const auto& b : basis) q = add(q, scaled(b, dot(p, b)));
    out.push_back(std::move(q));
  }
  return out;
}

double projection_defect(const DiscreteSphericalMeasure& nu, std::size_t samples, std::uint64_t seed) {
  const auto ns = null_space(nu);
  const std::size_t k = nu.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    PointSet a(k);
    const std::size_t n = size(rng);
    for (std::size_t i = 0; i < n; ++i) {
      Vector p(k);
      for (double& c : p) c = coord(rng);
      a.push_back(std::move(p));
    }
    const double lhs = discrete_linear_eval(a, nu);
    const double rhs = discrete_linear_eval(project(a, ns.span_basis), nu);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double delta_star_polytope(const DiversitySpec& spec, const PointSet& vertices) {
  return eval(spec, vertices);
}

}  // namespace diversity
