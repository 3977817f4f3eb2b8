#include <algorithm>
#include <cmath>
#include <optional>

#include "diversity/diversity.hpp"
#include "diversity/numerics.hpp"

namespace diversity {

namespace {

// Ball whose boundary passes through every point of `r` (the circumball within
// their affine hull). nullopt when `r` is affinely dependent.
std::optional<Ball> circumball(const std::vector<Vector>& r) {
  if (r.empty()) return std::nullopt;
  if (r.size() == 1) return Ball{r.front(), 0.0};
  const std::size_t m = r.size() - 1;
  std::vector<Vector> q;
  q.reserve(m);
  for (std::size_t i = 1; i < r.size(); ++i) q.push_back(subtract(r[i], r[0]));

  // c = r0 + sum lambda_i q_i with 2 q_i . (c - r0) = |q_i|^2.
  std::vector<Vector> gram(m, Vector(m));
  Vector rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = 2.0 * dot(q[i], q[j]);
    rhs[i] = dot(q[i], q[i]);
  }
  const auto lambda = solve_linear_system(std::move(gram), std::move(rhs), 1e-12);
  if (!lambda) return std::nullopt;
  Vector c = r[0];
  for (std::size_t i = 0; i < m; ++i) c = add(c, scaled(q[i], (*lambda)[i]));
  double radius = 0.0;
  for (const auto& p : r) radius = std::max(radius, norm2(subtract(p, c)));
  return Ball{std::move(c), radius};
}

// Fallback for numerically dependent boundary sets: midpoint of the farthest
// pair, grown to cover the whole set.
Ball covering_ball(const std::vector<Vector>& r) {
  std::size_t bi = 0, bj = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i; j < r.size(); ++j) {
      const double d = norm2(subtract(r[i], r[j]));
      if (d > best) best = d, bi = i, bj = j;
    }
  Vector c = scaled(add(r[bi], r[bj]), 0.5);
  double radius = 0.0;
  for (const auto& p : r) radius = std::max(radius, norm2(subtract(p, c)));
  return Ball{std::move(c), radius};
}

class Welzl {
 public:
  Welzl(std::vector<Vector> points, std::size_t dim, double eps)
      : points_(std::move(points)), dim_(dim), eps_(eps) {}

  Ball run() { return solve(points_.size()); }

 private:
  bool outside(const Ball& b, const Vector& p) const {
    if (b.radius < 0.0) return true;
    return norm2(subtract(p, b.center)) > b.radius + eps_;
  }

  Ball boundary_ball() const {
    if (boundary_.empty()) return Ball{Vector(dim_, 0.0), -1.0};
    if (auto b = circumball(boundary_)) return *b;
    return covering_ball(boundary_);
  }

  // Smallest ball enclosing points_[0, n) with boundary_ on its boundary.
  Ball solve(std::size_t n) {
    Ball ball = boundary_ball();
    if (boundary_.size() == dim_ + 1) return ball;
    for (std::size_t i = 0; i < n; ++i) {
      if (!outside(ball, points_[i])) continue;
      boundary_.push_back(points_[i]);
      ball = solve(i);
      boundary_.pop_back();
      std::rotate(points_.begin(), points_.begin() + static_cast<std::ptrdiff_t>(i),
                  points_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    return ball;
  }

  std::vector<Vector> points_;
  std::vector<Vector> boundary_;
  std::size_t dim_;
  double eps_;
};

}  // namespace

Ball min_enclosing_ball(const PointSet& a) {
  const PointSet pts = a.deduplicated();
  if (pts.empty()) return Ball{Vector(a.dim(), 0.0), 0.0};
  if (pts.size() == 1) return Ball{pts[0], 0.0};

  double scale = 0.0;
  for (const auto& p : pts.points())
    for (double c : p) scale = std::max(scale, std::abs(c));
  Ball b = Welzl(pts.points(), a.dim(), 1e-12 * std::max(1.0, scale)).run();
  // Exact covering radius for the returned centre.
  double radius = 0.0;
  for (const auto& p : pts.points()) radius = std::max(radius, norm2(subtract(p, b.center)));
  b.radius = radius;
  return b;
}

}  // namespace diversity
