#include "diversity/checkers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "diversity/errors.hpp"

namespace diversity {

namespace {

class Sampler {
 public:
  Sampler(const CheckConfig& cfg, std::size_t dim) : cfg_(cfg), dim_(dim), rng_(cfg.seed) {
    if (cfg.trials == 0) throw DomainError("check needs at least one trial");
    if (!(cfg.tol > 0.0)) throw DomainError("check tolerance must be positive");
    if (cfg.min_size > cfg.max_size) throw DomainError("check set-size range is empty");
    if (!(cfg.coord_lo < cfg.coord_hi)) throw DomainError("check coordinate range is empty");
  }

  Vector point() {
    std::uniform_real_distribution<double> c(cfg_.coord_lo, cfg_.coord_hi);
    Vector p(dim_);
    for (double& x : p) x = c(rng_);
    return p;
  }
  PointSet set(std::size_t lo, std::size_t hi) {
    lo = std::max(lo, cfg_.min_size);
    hi = std::max(lo, std::min(hi, cfg_.max_size));
    const std::size_t n = std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    PointSet a(dim_);
    for (std::size_t i = 0; i < n; ++i) a.push_back(point());
    return a;
  }
  PointSet set() { return set(cfg_.min_size, cfg_.max_size); }
  PointSet nonempty() { return set(1, cfg_.max_size); }
  double lambda() { return std::uniform_real_distribution<double>(0.0, cfg_.lambda_hi)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Vector weights(std::size_t n) {
    std::exponential_distribution<double> e(1.0);
    Vector w(n);
    double s = 0.0;
    for (double& x : w) s += (x = e(rng_));
    for (double& x : w) x /= s;
    return w;
  }
  std::size_t dim() const { return dim_; }

 private:
  const CheckConfig& cfg_;
  std::size_t dim_;
  std::mt19937_64 rng_;
};

class Recorder {
 public:
  Recorder(std::string property, const CheckConfig& cfg) : cfg_(cfg) {
    report_.property = std::move(property);
    report_.seed = cfg.seed;
    report_.trials = cfg.trials;
  }

  void trial(std::size_t t) { trial_ = t; }

  // Records lhs <= rhs (tolerance-scaled); `sets` and `scalars` describe the witness.
  void leq(double lhs, double rhs, const char* relation,
           std::vector<std::pair<std::string, PointSet>> sets,
           std::vector<std::pair<std::string, double>> scalars = {}) {
    record(lhs - rhs, lhs, rhs, relation, std::move(sets), std::move(scalars));
  }

  void eq(double lhs, double rhs, const char* relation,
          std::vector<std::pair<std::string, PointSet>> sets,
          std::vector<std::pair<std::string, double>> scalars = {}) {
    record(std::abs(lhs - rhs), lhs, rhs, relation, std::move(sets), std::move(scalars));
  }

  CheckReport finish() { return std::move(report_); }

 private:
  void record(double excess, double lhs, double rhs, const char* relation,
              std::vector<std::pair<std::string, PointSet>> sets,
              std::vector<std::pair<std::string, double>> scalars) {
    report_.worst_excess = std::max(report_.worst_excess, excess);
    const double slack = cfg_.tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (excess <= slack || !report_.pass) return;
    report_.pass = false;
    report_.witness = Witness{relation, trial_, std::move(sets), std::move(scalars), lhs, rhs};
  }

  const CheckConfig& cfg_;
  CheckReport report_;
  std::size_t trial_ = 0;
};

std::size_t spec_dim(const DiversitySpec& spec, const CheckConfig& cfg) {
  return spec.dim().value_or(cfg.dim);
}

PointSet negated(const PointSet& a) {
  PointSet out(a.dim());
  for (const auto& p : a.points()) out.push_back(scaled(p, -1.0));
  return out;
}

// Planar probe sets padded with zeros to `dim`.
PointSet planar(std::size_t dim, std::vector<std::pair<double, double>> pts) {
  PointSet out(dim);
  for (auto [x, y] : pts) {
    Vector p(dim, 0.0);
    p[0] = x;
    p[1] = y;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

CheckReport check_axioms(const SetFunction& f, std::size_t dim, const CheckConfig& cfg) {
  Sampler s(cfg, dim);
  Recorder r("axioms", cfg);
  r.leq(std::abs(f(PointSet(dim))), 0.0, "delta({}) = 0", {});
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    r.trial(t);
    const PointSet single(dim, {s.point()});
    r.leq(std::abs(f(single)), 0.0, "delta({a}) = 0", {{"A", single}});

    const PointSet a = s.set(), b = s.nonempty(), c = s.set();
    const double da = f(a);
    r.leq(-da, 0.0, "delta(A) >= 0", {{"A", a}});
    r.leq(da, f(a.united(b)), "delta(A) <= delta(A u B)", {{"A", a}, {"B", b}});
    r.leq(f(a.united(c)), f(a.united(b)) + f(b.united(c)), "delta(A u C) <= delta(A u B) + delta(B u C)",
          {{"A", a}, {"B", b}, {"C", c}});

    // Intersecting pair: both contain the first point of b.
    const PointSet x = with_point(a, b[0]), y = with_point(c, b[0]);
    r.leq(f(x.united(y)), f(x) + f(y), "delta(A u B) <= delta(A) + delta(B) when A, B meet",
          {{"A", x}, {"B", y}});
  }
  return r.finish();
}

CheckReport check_sublinear(const SetFunction& f, std::size_t dim, const CheckConfig& cfg) {
  Sampler s(cfg, dim);
  Recorder r("sublinear", cfg);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    r.trial(t);
    const PointSet a = s.nonempty(), b = s.nonempty();
    const double lambda = s.lambda();
    r.leq(f(minkowski_sum(a, b)), f(a) + f(b), "delta(A+B) <= delta(A) + delta(B)", {{"A", a}, {"B", b}});
    r.eq(f(scale(a, lambda)), lambda * f(a), "delta(lambda A) = lambda delta(A)", {{"A", a}},
         {{"lambda", lambda}});
  }
  return r.finish();
}

CheckReport check_linear(const SetFunction& f, std::size_t dim, const CheckConfig& cfg) {
  Sampler s(cfg, dim);
  Recorder r("linear", cfg);
  std::vector<std::pair<PointSet, PointSet>> probes;
  if (dim >= 2) {
    probes.emplace_back(planar(dim, {{0, 0}, {1, 0}}), planar(dim, {{0, 0}, {0, 1}}));
    const PointSet tri = planar(dim, {{0, 0}, {1, 0}, {0, 1}});
    probes.emplace_back(tri, negated(tri));
  }
  std::size_t t = 0;
  auto additive = [&](const PointSet& a, const PointSet& b) {
    r.eq(f(minkowski_sum(a, b)), f(a) + f(b), "delta(A+B) = delta(A) + delta(B)", {{"A", a}, {"B", b}});
  };
  for (const auto& [a, b] : probes) {
    r.trial(t++);
    additive(a, b);
  }
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    r.trial(t++);
    const PointSet a = s.nonempty();
    const PointSet b = i % 4 == 3 ? negated(a) : s.nonempty();
    additive(a, b);
    const double lambda = s.lambda();
    r.eq(f(scale(a, lambda)), lambda * f(a), "delta(lambda A) = lambda delta(A)", {{"A", a}},
         {{"lambda", lambda}});
  }
  return r.finish();
}

CheckReport check_translation_and_hull_invariance(const SetFunction& f, std::size_t dim,
                                                  const CheckConfig& cfg) {
  Sampler s(cfg, dim);
  Recorder r("invariance", cfg);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    r.trial(t);
    const PointSet a = s.nonempty();
    const Vector shift = s.point();
    const double da = f(a);
    const PointSet moved = translate(a, shift);
    r.eq(f(moved), da, "delta(A + t) = delta(A)", {{"A", a}, {"A+t", moved}});

    PointSet more = a;
    for (int j = 0; j < 5; ++j) {
      const Vector w = s.weights(a.size());
      Vector c(dim, 0.0);
      for (std::size_t i = 0; i < a.size(); ++i) c = add(c, scaled(a[i], w[i]));
      more.push_back(std::move(c));
    }
    r.eq(f(more), da, "delta(A u conv-combinations) = delta(A)", {{"A", a}, {"A'", more}});
  }
  return r.finish();
}

CheckReport check_deletion_inequality(const SetFunction& f, std::size_t dim, const CheckConfig& cfg) {
  Sampler s(cfg, dim);
  Recorder r("deletion", cfg);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    r.trial(t);
    PointSet a = s.set(3, 7).deduplicated();
    while (a.size() < 3) a.push_back(s.point());
    const double n = static_cast<double>(a.size());
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) total += f(without_point(a, i));
    r.leq(f(a), (n - 1) / (n * (n - 2)) * total, "delta(A) <= (n-1)/(n(n-2)) sum delta(A - a)",
          {{"A", a}});
  }
  return r.finish();
}

PointSet ball_polygon(std::size_t n, bool outer) {
  if (n < 3) throw DomainError("polygon needs at least 3 vertices");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  const double radius = outer ? 1.0 / std::cos(step / 2.0) : 1.0;
  const double phase = outer ? step / 2.0 : 0.0;
  PointSet p(2);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = phase + step * static_cast<double>(j);
    p.push_back({radius * std::cos(angle), radius * std::sin(angle)});
  }
  return p;
}

CheckReport check_lipschitz(const SetFunction& f, std::size_t dim, const CheckConfig& cfg) {
  if (dim != 2) throw PreconditionError("Lipschitz check is planar only");
  Sampler s(cfg, dim);
  Recorder r("lipschitz", cfg);
  const PointSet inner = ball_polygon(64, false);
  const double constant = f(ball_polygon(64, true));
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    r.trial(t);
    const PointSet a = s.nonempty();
    const double lambda = s.lambda();
    const double gap = std::abs(f(minkowski_sum(a, scale(inner, lambda))) - f(a));
    r.leq(gap, lambda * constant, "|delta(A + lambda Q) - delta(A)| <= lambda delta(P)", {{"A", a}},
          {{"lambda", lambda}, {"delta(P)", constant}});
  }
  return r.finish();
}

CheckReport check_valuation_boxes(const SetFunction& f, std::size_t dim, const CheckConfig& cfg) {
  if (dim != 2) throw PreconditionError("valuation check is planar only");
  Sampler s(cfg, dim);
  Recorder r("valuation", cfg);
  auto box = [](double x0, double x1, double y0, double y1) {
    return PointSet(2, {{x0, y0}, {x1, y0}, {x0, y1}, {x1, y1}});
  };
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    r.trial(t);
    double x0 = s.uniform(cfg.coord_lo, cfg.coord_hi), x1 = s.uniform(cfg.coord_lo, cfg.coord_hi);
    if (x0 > x1) std::swap(x0, x1);
    // Stacked boxes sharing the x-extent with overlapping y-ranges [y0, y2], [y1, y3].
    Vector ys{s.uniform(cfg.coord_lo, cfg.coord_hi), s.uniform(cfg.coord_lo, cfg.coord_hi),
              s.uniform(cfg.coord_lo, cfg.coord_hi), s.uniform(cfg.coord_lo, cfg.coord_hi)};
    std::sort(ys.begin(), ys.end());
    PointSet k = box(x0, x1, ys[0], ys[2]), l = box(x0, x1, ys[1], ys[3]);
    if (t % 2 == 1) {  // same construction, transposed
      auto flip = [](const PointSet& p) {
        PointSet q(2);
        for (const auto& v : p.points()) q.push_back({v[1], v[0]});
        return q;
      };
      k = flip(k);
      l = flip(l);
    }
    const PointSet meet = t % 2 == 1 ? box(ys[1], ys[2], x0, x1) : box(x0, x1, ys[1], ys[2]);
    const PointSet join = t % 2 == 1 ? box(ys[0], ys[3], x0, x1) : box(x0, x1, ys[0], ys[3]);
    r.eq(f(meet) + f(join), f(k) + f(l), "delta(K n L) + delta(K u L) = delta(K) + delta(L)",
         {{"K", k}, {"L", l}});
  }
  return r.finish();
}

CheckReport check_axioms(const DiversitySpec& spec, const CheckConfig& cfg) {
  return check_axioms(evaluator(spec), spec_dim(spec, cfg), cfg);
}
CheckReport check_sublinear(const DiversitySpec& spec, const CheckConfig& cfg) {
  return check_sublinear(evaluator(spec), spec_dim(spec, cfg), cfg);
}
CheckReport check_linear(const DiversitySpec& spec, const CheckConfig& cfg) {
  return check_linear(evaluator(spec), spec_dim(spec, cfg), cfg);
}
CheckReport check_translation_and_hull_invariance(const DiversitySpec& spec, const CheckConfig& cfg) {
  return check_translation_and_hull_invariance(evaluator(spec), spec_dim(spec, cfg), cfg);
}
CheckReport check_deletion_inequality(const DiversitySpec& spec, const CheckConfig& cfg) {
  return check_deletion_inequality(evaluator(spec), spec_dim(spec, cfg), cfg);
}
CheckReport check_lipschitz(const DiversitySpec& spec, const CheckConfig& cfg) {
  return check_lipschitz(evaluator(spec), spec_dim(spec, cfg), cfg);
}
CheckReport check_valuation_boxes(const DiversitySpec& spec, const CheckConfig& cfg) {
  return check_valuation_boxes(evaluator(spec), spec_dim(spec, cfg), cfg);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms",  "sublinear", "linear",    "invariance",
                                              "deletion", "lipschitz", "valuation", "all"};
  return names;
}

std::vector<CheckReport> run_suite(const DiversitySpec& spec, const std::string& suite,
                                   const CheckConfig& cfg) {
  if (suite == "axioms") return {check_axioms(spec, cfg)};
  if (suite == "sublinear") return {check_sublinear(spec, cfg)};
  if (suite == "linear") return {check_linear(spec, cfg)};
  if (suite == "invariance") return {check_translation_and_hull_invariance(spec, cfg)};
  if (suite == "deletion") return {check_deletion_inequality(spec, cfg)};
  if (suite == "lipschitz") return {check_lipschitz(spec, cfg)};
  if (suite == "valuation") return {check_valuation_boxes(spec, cfg)};
  if (suite != "all") throw ParseError("unknown suite '" + suite + "'");
  std::vector<CheckReport> out{check_axioms(spec, cfg), check_translation_and_hull_invariance(spec, cfg),
                               check_deletion_inequality(spec, cfg), check_sublinear(spec, cfg)};
  if (spec.is_linear()) out.push_back(check_linear(spec, cfg));
  if (spec_dim(spec, cfg) == 2) {
    out.push_back(check_lipschitz(spec, cfg));
    if (spec.is_linear()) out.push_back(check_valuation_boxes(spec, cfg));
  }
  return out;
}

double hausdorff_lower_estimate(const PointSet& a, const PointSet& b, const std::vector<Vector>& directions) {
  if (a.empty() || b.empty()) throw DomainError("Hausdorff estimate needs nonempty sets");
  if (a.dim() != b.dim()) throw DomainError("Hausdorff estimate needs sets of equal dimension");
  double best = 0.0;
  for (const auto& x : directions) {
    if (std::abs(norm2(x) - 1.0) > 1e-10) throw DomainError("Hausdorff directions must be unit vectors");
    best = std::max(best, std::abs(support(a, x) - support(b, x)));
  }
  return best;
}

}  // namespace diversity
