#include "diversity/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "diversity/errors.hpp"

namespace diversity {

namespace {

void require_same_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DomainError(std::string(what) + ": dimension mismatch (expected " +
                      std::to_string(expected) + ", got " + std::to_string(got) + ")");
  }
}

bool near_equal(const Vector& a, const Vector& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Vector add(std::span<const double> a, std::span<const double> b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector subtract(std::span<const double> a, std::span<const double> b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scaled(std::span<const double> a, double s) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

PointSet::PointSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw DomainError("point set dimension must be at least 1");
}

PointSet::PointSet(std::size_t dim, std::vector<Vector> points) : PointSet(dim) {
  points_.reserve(points.size());
  for (auto& p : points) push_back(std::move(p));
}

void PointSet::push_back(Vector p) {
  require_same_dim(dim_, p.size(), "point set");
  for (double c : p) {
    if (!std::isfinite(c)) throw DomainError("point coordinates must be finite");
  }
  points_.push_back(std::move(p));
}

PointSet PointSet::deduplicated(double tol) const {
  PointSet out(dim_);
  for (const auto& p : points_) {
    const bool seen = std::any_of(out.points_.begin(), out.points_.end(),
                                  [&](const Vector& q) { return near_equal(p, q, tol); });
    if (!seen) out.points_.push_back(p);
  }
  return out;
}

PointSet PointSet::united(const PointSet& other) const {
  require_same_dim(dim_, other.dim_, "union");
  PointSet out = *this;
  out.points_.insert(out.points_.end(), other.points_.begin(), other.points_.end());
  return out.deduplicated();
}

double support(const PointSet& a, std::span<const double> x) {
  if (a.empty()) throw DomainError("support undefined on empty set");
  require_same_dim(a.dim(), x.size(), "support");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : a.points()) best = std::max(best, dot(p, x));
  return best;
}

double width(const PointSet& a, std::span<const double> x) {
  if (a.empty()) throw DomainError("support undefined on empty set");
  require_same_dim(a.dim(), x.size(), "width");
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& p : a.points()) {
    const double d = dot(p, x);
    hi = std::max(hi, d);
    lo = std::min(lo, d);
  }
  return hi - lo;
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  require_same_dim(a.dim(), b.dim(), "minkowski_sum");
  PointSet out(a.dim());
  for (const auto& p : a.points()) {
    for (const auto& q : b.points()) out.push_back(add(p, q));
  }
  return out.deduplicated();
}

PointSet scale(const PointSet& a, double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("scale factor must be nonnegative");
  PointSet out(a.dim());
  for (const auto& p : a.points()) out.push_back(scaled(p, lambda));
  return out;
}

PointSet translate(const PointSet& a, std::span<const double> t) {
  require_same_dim(a.dim(), t.size(), "translate");
  PointSet out(a.dim());
  for (const auto& p : a.points()) out.push_back(add(p, t));
  return out;
}

PointSet with_point(const PointSet& a, Vector p) {
  PointSet out = a;
  out.push_back(std::move(p));
  return out;
}

PointSet without_point(const PointSet& a, std::size_t i) {
  PointSet out(a.dim());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j != i) out.push_back(a[j]);
  }
  return out;
}

}  // namespace diversity
