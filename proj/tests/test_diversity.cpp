#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "diversity/diversity.hpp"
#include "diversity/errors.hpp"
#include "test_support.hpp"

using namespace diversity;
using diversity::fixtures::Generator;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kPi = std::numbers::pi;

SimplexKernelSpec triangle_simplex() {
  return {{{1, 0}, {0, 1}, {-1, -1}}, {1.0 / 3, 1.0 / 3, 1.0 / 3}};
}

HPolytope triangle_kernel() { return HPolytope({{1, 0}, {0, 1}, {-1, -1}}, {1, 1, 1}); }

// Planar smallest enclosing circle by exhaustion over pairs and triples.
double brute_circumradius_2d(const PointSet& a) {
  const auto& p = a.points();
  const std::size_t n = p.size();
  if (n <= 1) return 0.0;
  auto covers = [&](double cx, double cy, double r) {
    for (const auto& q : p)
      if (std::hypot(q[0] - cx, q[1] - cy) > r * (1 + 1e-12) + 1e-12) return false;
    return true;
  };
  double best = INFINITY;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double cx = 0.5 * (p[i][0] + p[j][0]), cy = 0.5 * (p[i][1] + p[j][1]);
      const double r = 0.5 * std::hypot(p[i][0] - p[j][0], p[i][1] - p[j][1]);
      if (r < best && covers(cx, cy, r)) best = r;
      for (std::size_t k = j + 1; k < n; ++k) {
        const double ax = p[i][0], ay = p[i][1], bx = p[j][0], by = p[j][1], qx = p[k][0], qy = p[k][1];
        const double d = 2 * (ax * (by - qy) + bx * (qy - ay) + qx * (ay - by));
        if (std::abs(d) < 1e-12) continue;
        const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, q2 = qx * qx + qy * qy;
        const double ux = (a2 * (by - qy) + b2 * (qy - ay) + q2 * (ay - by)) / d;
        const double uy = (a2 * (qx - bx) + b2 * (ax - qx) + q2 * (bx - ax)) / d;
        const double rr = std::hypot(ax - ux, ay - uy);
        if (rr < best && covers(ux, uy, rr)) best = rr;
      }
    }
  return best;
}

PointSet minkowski_pair(const PointSet& a, const PointSet& b) { return minkowski_sum(a, b); }

// One spec of every family in the plane.
std::vector<DiversitySpec> planar_specs() {
  return {
      DiversitySpec::diameter(Norm::L1),
      DiversitySpec::diameter(Norm::L2),
      DiversitySpec::diameter(Norm::Linf),
      DiversitySpec::l1(),
      DiversitySpec::circumradius(),
      DiversitySpec::minkowski(HPolytope::linf_ball(2)),
      DiversitySpec::minkowski(triangle_kernel()),
      DiversitySpec::simplex_closed_form(triangle_simplex()),
      DiversitySpec::discrete_linear(l1_measure(2)),
      DiversitySpec::mean_width(SphereSampler::equiangular(64)),
      DiversitySpec::mean_width_p(2.0, SphereSampler::uniform(2, 64, 5)),
      DiversitySpec::zonotope({{1, 0}, {0, 1}, {1 / kSqrt2, -1 / kSqrt2}}),
      DiversitySpec::weighted_sum({0.5, 2.0}, {DiversitySpec::l1(), DiversitySpec::circumradius()}),
      DiversitySpec::max_of({DiversitySpec::circumradius(), DiversitySpec::diameter(Norm::Linf)}),
  };
}

}  // namespace

TEST(Eval, EmptyAndSingletonAreZero) {
  for (const auto& s : planar_specs()) {
    EXPECT_EQ(eval(s, PointSet(2)), 0.0) << s.type_name();
    EXPECT_EQ(eval(s, PointSet(2, {{1, 2}})), 0.0) << s.type_name();
  }
}

TEST(Eval, DimensionMismatch) {
  EXPECT_THROW(eval(DiversitySpec::minkowski(HPolytope::linf_ball(3)), PointSet(2, {{0, 0}, {1, 1}})),
               DomainError);
  EXPECT_THROW(eval(DiversitySpec::mean_width(SphereSampler::equiangular(8)), PointSet(3, {{0, 0, 0}})),
               DomainError);
}

TEST(Eval, L1Example) {
  EXPECT_DOUBLE_EQ(eval(DiversitySpec::l1(), PointSet(2, {{0, 0}, {1, 2}})), 3.0);
}

TEST(Diameter, Examples) {
  EXPECT_DOUBLE_EQ(diameter_eval(PointSet(2, {{0, 0}, {3, 4}}), Norm::L2), 5.0);
  EXPECT_DOUBLE_EQ(diameter_eval(PointSet(2, {{0, 0}, {1, 1}}), Norm::Linf), 1.0);
  EXPECT_DOUBLE_EQ(diameter_eval(PointSet(2, {{0, 0}, {1, 0}, {0, 1}}), Norm::L1), 2.0);
}

TEST(L1, LinearAndMatchesMeasure) {
  const PointSet a(2, {{0, 0}, {1, 2}});
  const PointSet b(2, {{0, 0}, {0, 1}});
  EXPECT_DOUBLE_EQ(l1_eval(minkowski_pair(a, b)), l1_eval(a) + 1.0);
  Generator gen(4);
  for (int t = 0; t < 20; ++t) {
    const auto x = gen.points(2, gen.index(1, 9));
    EXPECT_NEAR(l1_eval(x), discrete_linear_eval(x, l1_measure(2)), 1e-10);
  }
}

TEST(Circumradius, Examples) {
  EXPECT_NEAR(circumradius_eval(PointSet(2, {{0, 0}, {2, 0}})), 1.0, 1e-12);
  EXPECT_NEAR(circumradius_eval(fixtures::square_corners()), kSqrt2 / 2, 1e-12);
  const PointSet tri(2, {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
  EXPECT_NEAR(circumradius_eval(tri), 1 / std::sqrt(3.0), 1e-12);
  const auto ball = min_enclosing_ball(fixtures::square_corners());
  EXPECT_NEAR(ball.center[0], 0.5, 1e-12);
  EXPECT_NEAR(ball.center[1], 0.5, 1e-12);
}

TEST(Circumradius, MatchesBruteForceInThePlane) {
  Generator gen(77);
  for (int t = 0; t < 300; ++t) {
    const auto a = gen.points(2, gen.index(2, 12)).deduplicated();
    EXPECT_NEAR(circumradius_eval(a), brute_circumradius_2d(a), 1e-9);
  }
}

TEST(Circumradius, CoversAndIsTightInHigherDimensions) {
  Generator gen(78);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = gen.index(3, 5);
    const auto a = gen.points(k, gen.index(2, 15));
    const auto b = min_enclosing_ball(a);
    double far = 0.0;
    for (const auto& p : a.points()) far = std::max(far, norm2(subtract(p, b.center)));
    EXPECT_NEAR(far, b.radius, 1e-12);
    // Any other centre does no better: try perturbations.
    for (int s = 0; s < 20; ++s) {
      const Vector c = add(b.center, scaled(gen.unit(k), 1e-3));
      double r = 0.0;
      for (const auto& p : a.points()) r = std::max(r, norm2(subtract(p, c)));
      EXPECT_GE(r, b.radius - 1e-9);
    }
    // Never larger than half the diameter times sqrt(2k/(k+1)) (Jung).
    EXPECT_LE(b.radius, diameter_eval(a, Norm::L2) * std::sqrt(k / (2.0 * (k + 1))) + 1e-9);
  }
}

TEST(Minkowski, Examples) {
  EXPECT_NEAR(minkowski_eval(PointSet(2, {{0, 0}, {2, 4}}), HPolytope::linf_ball(2)), 2.0, 1e-9);
  EXPECT_NEAR(minkowski_eval(PointSet(2, {{0, 0}, {3, 0}}), triangle_kernel()), 1.0, 1e-9);
}

TEST(Minkowski, PolygonBallIsStrictlySubadditive) {
  const auto k = HPolytope::regular_polygon(64);
  const PointSet a(2, {{0, 0}, {1, 0}});
  const PointSet b(2, {{0, 0}, {0, 1}});
  const double sum = minkowski_eval(minkowski_pair(a, b), k);
  EXPECT_LT(sum, minkowski_eval(a, k) + minkowski_eval(b, k) - 0.1);
  // Square of side 1 has circumradius sqrt(2)/2; the polygon circumscribes the disk.
  EXPECT_NEAR(sum, kSqrt2 / 2, 2e-3);
}

TEST(Minkowski, UnboundedKernelGivesSemidiversity) {
  const HPolytope slab({{0, 1}, {0, -1}}, {1, 1});
  EXPECT_NEAR(minkowski_eval(PointSet(2, {{0, 0}, {5, 0}}), slab), 0.0, 1e-12);
  EXPECT_NEAR(minkowski_eval(PointSet(2, {{0, 0}, {5, 4}}), slab), 2.0, 1e-9);
}

TEST(SimplexClosedForm, Examples) {
  const auto s = triangle_simplex();
  EXPECT_NEAR(simplex_closed_form_eval(PointSet(2, {{0, 0}, {3, 0}}), s), 1.0, 1e-12);
  EXPECT_NEAR(simplex_closed_form_eval(PointSet(2, {{4, -7}}), s), 0.0, 1e-12);
  Generator gen(5);
  const auto a = gen.points(2, 6);
  const auto moved = translate(a, Vector{3.5, -2.0});
  EXPECT_NEAR(simplex_closed_form_eval(a, s), simplex_closed_form_eval(moved, s), 1e-12);
}

TEST(SimplexClosedForm, AgreesWithLinearProgram) {
  Generator gen(99);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t k = gen.index(2, 5);
    const auto s = fixtures::random_simplex(gen, k);
    for (int t = 0; t < 5; ++t) {
      const auto a = gen.points(k, gen.index(1, 10));
      EXPECT_NEAR(simplex_closed_form_eval(a, s), minkowski_eval(a, s.kernel()), 1e-8);
    }
  }
}

TEST(DiscreteLinear, Examples) {
  EXPECT_DOUBLE_EQ(discrete_linear_eval(PointSet(2, {{0, 0}, {1, 2}}), l1_measure(2)), 3.0);
  const auto nu = measure_from_simplex_kernel(triangle_kernel());
  Generator gen(6);
  for (int t = 0; t < 20; ++t) {
    const auto a = gen.points(2, gen.index(1, 8));
    EXPECT_NEAR(discrete_linear_eval(a, nu), minkowski_eval(a, triangle_kernel()), 1e-8);
  }
}

TEST(MeanWidth, Segment) {
  const PointSet seg(2, {{0, 0}, {1, 0}});
  EXPECT_NEAR(mean_width_eval(seg, SphereSampler::equiangular(360)), 2 / kPi, 2e-3);
}

TEST(MeanWidth, PolygonApproachesDisk) {
  EXPECT_NEAR(mean_width_eval(fixtures::regular_polygon(64), SphereSampler::equiangular(720)), 2.0, 1e-2);
}

TEST(MeanWidth, RandomSamplerIsTranslationInvariant) {
  const auto s = SphereSampler::uniform(3, 101, 9);
  Generator gen(7);
  const auto a = gen.points(3, 5);
  EXPECT_NEAR(mean_width_eval(a, s), mean_width_eval(translate(a, Vector{1, 2, 3}), s), 1e-9);
  EXPECT_NEAR(mean_width_eval(PointSet(3, {{1, 1, 1}}), s), 0.0, 1e-12);
}

TEST(MeanWidthP, PEqualOneMatchesMeanWidth) {
  Generator gen(8);
  const auto s = SphereSampler::uniform(3, 200, 1);
  for (int t = 0; t < 10; ++t) {
    const auto a = gen.points(3, gen.index(2, 6));
    EXPECT_NEAR(mean_width_p_eval(a, 1.0, s), mean_width_eval(a, s), 1e-9);
  }
  EXPECT_EQ(mean_width_p_eval(PointSet(3, {{0, 0, 0}}), 3.0, s), 0.0);
  EXPECT_THROW(DiversitySpec::mean_width_p(0.5, s), DomainError);
}

TEST(MeanWidthP, SegmentAgainstQuadratureOracle) {
  const double len = kPi;
  // Midpoint rule for the integral of (L |cos t|)^2 over the circle.
  const int m = 200000;
  double integral = 0.0;
  for (int i = 0; i < m; ++i) {
    const double t = 2 * kPi * (i + 0.5) / m;
    integral += std::pow(len * std::abs(std::cos(t)), 2);
  }
  integral *= 2 * kPi / m;
  const double oracle = std::sqrt(integral) / (2 * kPi);
  const PointSet seg(2, {{0, 0}, {len, 0}});
  EXPECT_NEAR(mean_width_p_eval(seg, 2.0, SphereSampler::equiangular(3600)), oracle, 1e-3);
}

TEST(Zonotope, Examples) {
  const PointSet a(2, {{0, 0}, {1, 0}, {0, 1}});
  EXPECT_NEAR(zonotope_eval(a, {{1, 0}, {0, 1}}), 2.0, 1e-6);
  const PointSet sum = minkowski_pair(a, PointSet(2, {{0, 0}, {-1, 0}, {0, -1}}));
  const std::vector<Vector> dirs{{1, 0}, {0, 1}, {1 / kSqrt2, -1 / kSqrt2}};
  EXPECT_NEAR(zonotope_eval(sum, dirs), 2 + kSqrt2, 1e-6);
  EXPECT_NEAR(zonotope_eval(PointSet(2, {{0, 0}, {3, 0}}), {{1, 0}}), 3.0, 1e-9);
}

TEST(Zonotope, InsufficientDirections) {
  EXPECT_THROW(zonotope_eval(PointSet(2, {{0, 0}, {1, 1}}), {{1, 0}}), PreconditionError);
}

TEST(Zonotope, FitContainsEveryPoint) {
  Generator gen(12);
  const std::vector<Vector> dirs{{1, 0}, {0, 1}, {1 / kSqrt2, 1 / kSqrt2}};
  for (int t = 0; t < 20; ++t) {
    const auto a = gen.points(2, gen.index(2, 8));
    const auto fit = fit_zonotope(a, dirs);
    double total = 0.0;
    for (double x : fit.segment_lengths) {
      EXPECT_GE(x, -1e-9);
      total += x;
    }
    EXPECT_NEAR(total, fit.length, 1e-9);
    // Upper bound by the l1 box fit and lower bound by the l2 diameter.
    EXPECT_LE(fit.length, l1_eval(a) + 1e-9);
    EXPECT_GE(fit.length, diameter_eval(a, Norm::L2) - 1e-9);
  }
}

TEST(Zonotope, MultistartNeverWorse) {
  Generator gen(13);
  const auto a = gen.points(2, 6);
  const std::vector<Vector> dirs{{1, 0}, {0, 1}};
  EXPECT_LE(zonotope_multistart(a, dirs, 5, 3, 1), zonotope_eval(a, dirs) + 1e-12);
}

TEST(Combinators, Examples) {
  Generator gen(14);
  const auto single = DiversitySpec::max_of({DiversitySpec::circumradius()});
  const auto halves = DiversitySpec::weighted_sum({0.5, 0.5}, {DiversitySpec::l1(), DiversitySpec::l1()});
  const auto doubled = DiversitySpec::max_of(
      {DiversitySpec::l1(), DiversitySpec::weighted_sum({2.0}, {DiversitySpec::discrete_linear(l1_measure(2))})});
  for (int t = 0; t < 20; ++t) {
    const auto a = gen.points(2, gen.index(1, 8));
    EXPECT_DOUBLE_EQ(eval(single, a), circumradius_eval(a));
    EXPECT_NEAR(eval(halves, a), l1_eval(a), 1e-12);
    EXPECT_NEAR(eval(doubled, a), 2 * l1_eval(a), 1e-10);
  }
  EXPECT_THROW(DiversitySpec::max_of({}), DomainError);
  EXPECT_THROW(DiversitySpec::weighted_sum({}, {}), DomainError);
  EXPECT_THROW(DiversitySpec::weighted_sum({-1.0}, {DiversitySpec::l1()}), DomainError);
}

TEST(Spec, FactoriesValidate) {
  EXPECT_THROW(DiversitySpec::zonotope({}), DomainError);
  EXPECT_THROW(DiversitySpec::zonotope({{1, 1}}), DomainError);
  EXPECT_THROW(DiversitySpec::discrete_linear({{{{1, 0}, 1}}}), PreconditionError);
  EXPECT_THROW(DiversitySpec::max_of({DiversitySpec::minkowski(HPolytope::linf_ball(2)),
                                      DiversitySpec::minkowski(HPolytope::linf_ball(3))}),
               DomainError);
}

TEST(Spec, Classification) {
  EXPECT_TRUE(DiversitySpec::l1().is_linear());
  EXPECT_TRUE(DiversitySpec::mean_width(SphereSampler::equiangular(8)).is_linear());
  EXPECT_FALSE(DiversitySpec::circumradius().is_linear());
  EXPECT_FALSE(DiversitySpec::mean_width_p(2, SphereSampler::equiangular(8)).is_linear());
  for (const auto& s : planar_specs()) EXPECT_TRUE(s.is_sublinear()) << s.type_name();
  EXPECT_EQ(DiversitySpec::simplex_closed_form(triangle_simplex()).type_name(), "simplex-closed-form");
}

TEST(NullSpace, Examples) {
  EXPECT_TRUE(null_space(l1_measure(2)).basis.empty());
  const DiscreteSphericalMeasure axis{{{{1, 0}, 1}, {{-1, 0}, 1}}};
  const auto ns = null_space(axis);
  ASSERT_EQ(ns.basis.size(), 1u);
  EXPECT_NEAR(std::abs(ns.basis[0][1]), 1.0, 1e-12);
  EXPECT_NEAR(ns.basis[0][0], 0.0, 1e-12);
  EXPECT_NEAR(discrete_linear_eval(PointSet(2, {{0, 0}, {3, 7}}), axis), 3.0, 1e-12);
  EXPECT_LE(projection_defect(axis, 50, 1), 1e-9);
  EXPECT_LE(projection_defect(l1_measure(3), 50, 2), 1e-9);
  const auto full = null_space(l1_measure(2));
  Generator gen(15);
  const auto a = gen.points(2, 5);
  const auto pa = project(a, full.span_basis);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t d = 0; d < 2; ++d) EXPECT_NEAR(pa[i][d], a[i][d], 1e-12);
}

TEST(DeltaStar, HullInvarianceAndScaling) {
  Generator gen(16);
  for (const auto& s : planar_specs()) {
    const auto v = gen.points(2, 5);
    auto more = v;
    for (int i = 0; i < 10; ++i) {
      const auto w = gen.simplex_weights(v.size());
      Vector c(2, 0.0);
      for (std::size_t j = 0; j < v.size(); ++j) c = add(c, scaled(v[j], w[j]));
      more.push_back(c);
    }
    const double base = delta_star_polytope(s, v);
    EXPECT_NEAR(delta_star_polytope(s, more), base, 1e-8 * std::max(1.0, base)) << s.type_name();
    EXPECT_NEAR(delta_star_polytope(s, scale(v, 2.5)), 2.5 * base, 1e-8 * std::max(1.0, base)) << s.type_name();
  }
  auto centred = fixtures::square_corners();
  centred.push_back({0.5, 0.5});
  EXPECT_NEAR(delta_star_polytope(DiversitySpec::circumradius(), centred),
              delta_star_polytope(DiversitySpec::circumradius(), fixtures::square_corners()), 1e-12);
}

TEST(Invariants, AxiomsTranslationAndSublinearity) {
  Generator gen(17);
  for (const auto& s : planar_specs()) {
    for (int t = 0; t < 15; ++t) {
      const auto a = gen.points(2, gen.index(1, 5));
      const auto b = gen.points(2, gen.index(1, 5));
      const auto c = gen.points(2, gen.index(1, 5));
      const double da = eval(s, a);
      const auto tol = [&](double x) { return 1e-9 * std::max(1.0, x); };
      EXPECT_NEAR(eval(s, translate(a, gen.vector(2))), da, tol(da)) << s.type_name();
      EXPECT_LE(da, eval(s, a.united(b)) + tol(da)) << s.type_name();
      const double ac = eval(s, a.united(c));
      EXPECT_LE(ac, eval(s, a.united(b)) + eval(s, b.united(c)) + tol(ac)) << s.type_name();
      const double sum = eval(s, minkowski_pair(a, b));
      const double db = eval(s, b);
      EXPECT_LE(sum, da + db + tol(sum)) << s.type_name();
      if (s.is_linear()) {
        EXPECT_NEAR(sum, da + db, tol(sum)) << s.type_name();
      }
      const double lambda = gen.uniform(0, 3);
      EXPECT_NEAR(eval(s, scale(a, lambda)), lambda * da, tol(da)) << s.type_name();
    }
  }
}

TEST(Invariants, DeletionInequality) {
  Generator gen(18);
  for (const auto& s : planar_specs()) {
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = gen.index(3, 7);
      const auto a = gen.points(2, n);
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) total += eval(s, without_point(a, i));
      const double nd = static_cast<double>(n);
      const double bound = (nd - 1) / (nd * (nd - 2)) * total;
      EXPECT_LE(eval(s, a), bound + 1e-9 * std::max(1.0, bound)) << s.type_name();
    }
  }
}

TEST(Invariants, RestrictionToPairsIsANorm) {
  Generator gen(19);
  const Vector origin{0, 0};
  for (const auto& s : planar_specs()) {
    auto norm = [&](const Vector& x) { return eval(s, PointSet(2, {origin, x})); };
    for (int t = 0; t < 10; ++t) {
      const auto x = gen.vector(2), y = gen.vector(2);
      const double nx = norm(x);
      EXPECT_NEAR(nx, norm(scaled(x, -1.0)), 1e-9 * std::max(1.0, nx)) << s.type_name();
      EXPECT_NEAR(norm(scaled(x, 1.7)), 1.7 * nx, 1e-9 * std::max(1.0, nx)) << s.type_name();
      EXPECT_LE(norm(add(x, y)), nx + norm(y) + 1e-9 * std::max(1.0, nx)) << s.type_name();
    }
  }
}
