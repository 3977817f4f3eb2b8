#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace diversity {

using Vector = std::vector<double>;

/// Coordinate tolerance used when collapsing duplicate points.
inline constexpr double kDedupTolerance = 1e-12;

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
Vector add(std::span<const double> a, std::span<const double> b);
Vector subtract(std::span<const double> a, std::span<const double> b);
Vector scaled(std::span<const double> a, double s);

/// A finite list of points in R^dim. May be empty; duplicates are allowed
/// until `deduplicated()` is called.
class PointSet {
 public:
  explicit PointSet(std::size_t dim);
  PointSet(std::size_t dim, std::vector<Vector> points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  const std::vector<Vector>& points() const noexcept { return points_; }
  const Vector& operator[](std::size_t i) const { return points_[i]; }

  /// Appends a point; throws DomainError on dimension mismatch or non-finite coordinates.
  void push_back(Vector p);

  /// Copy with duplicates (per-coordinate within `tol`) removed; first occurrence kept.
  PointSet deduplicated(double tol = kDedupTolerance) const;

  /// Set union (concatenation followed by dedup).
  PointSet united(const PointSet& other) const;

 private:
  std::size_t dim_;
  std::vector<Vector> points_;
};

/// h_A(x) = max over a in A of a.x. Throws on empty A or dimension mismatch.
double support(const PointSet& a, std::span<const double> x);

/// w_A(x) = h_A(x) + h_A(-x).
double width(const PointSet& a, std::span<const double> x);

/// {a + b : a in A, b in B}, deduplicated.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);

/// lambda * A for lambda >= 0.
PointSet scale(const PointSet& a, double lambda);

/// A + t.
PointSet translate(const PointSet& a, std::span<const double> t);

/// Points of A in order, with `p` appended (no dedup).
PointSet with_point(const PointSet& a, Vector p);

/// A without its i-th point.
PointSet without_point(const PointSet& a, std::size_t i);

}  // namespace diversity
