#include "diversity/finite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "diversity/errors.hpp"
#include "diversity/numerics.hpp"

namespace diversity {

DiversityTable::DiversityTable(std::vector<std::string> ground, std::vector<double> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (ground_.empty()) throw DomainError("diversity table needs a nonempty ground set");
  if (ground_.size() > kMaxGround) {
    throw DomainError("diversity table ground set exceeds " + std::to_string(kMaxGround) + " labels");
  }
  if (std::set<std::string>(ground_.begin(), ground_.end()).size() != ground_.size()) {
    throw DomainError("diversity table labels must be distinct");
  }
  if (values_.size() != (std::size_t{1} << ground_.size())) {
    throw DomainError("diversity table needs one value per subset");
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) throw DomainError("diversity table values must be finite and nonnegative");
  }
  values_[0] = 0.0;
}

DiversityTable DiversityTable::from_function(std::vector<std::string> ground,
                                             const std::function<double(Subset)>& value) {
  if (ground.size() > kMaxGround) {
    throw DomainError("diversity table ground set exceeds " + std::to_string(kMaxGround) + " labels");
  }
  std::vector<double> v(std::size_t{1} << ground.size(), 0.0);
  for (std::size_t s = 1; s < v.size(); ++s) v[s] = value(static_cast<Subset>(s));
  return DiversityTable(std::move(ground), std::move(v));
}

Subset DiversityTable::subset_of(const std::vector<std::string>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) {
    const auto it = std::find(ground_.begin(), ground_.end(), l);
    if (it == ground_.end()) throw DomainError("unknown label '" + l + "'");
    s |= Subset{1} << (it - ground_.begin());
  }
  return s;
}

std::vector<std::string> DiversityTable::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (s & (Subset{1} << i)) out.push_back(ground_[i]);
  return out;
}

DiversityTable DiversityTable::scaled(double c) const {
  auto v = values_;
  for (double& x : v) x *= c;
  return DiversityTable(ground_, std::move(v));
}

DiversityTable restrict(const DiversitySpec& spec,
                        const std::vector<std::pair<std::string, Vector>>& labelled) {
  if (labelled.empty()) throw DomainError("restriction needs at least one labelled point");
  if (labelled.size() > kMaxGround) {
    throw DomainError("restriction exceeds " + std::to_string(kMaxGround) + " labelled points");
  }
  const std::size_t dim = labelled.front().second.size();
  std::vector<std::string> ground;
  for (const auto& [label, p] : labelled) {
    if (p.size() != dim) throw DomainError("labelled points differ in dimension");
    ground.push_back(label);
  }
  return DiversityTable::from_function(std::move(ground), [&](Subset s) {
    PointSet a(dim);
    for (std::size_t i = 0; i < labelled.size(); ++i)
      if (s & (Subset{1} << i)) a.push_back(labelled[i].second);
    return eval(spec, a);
  });
}

std::string to_string(AxiomViolation::Kind k) {
  switch (k) {
    case AxiomViolation::Kind::NonzeroSingleton: return "D1";
    case AxiomViolation::Kind::Negative: return "nonnegativity";
    case AxiomViolation::Kind::Monotonicity: return "D3";
    case AxiomViolation::Kind::Intersecting: return "D4";
  }
  return "?";
}

std::vector<AxiomViolation> check_table_axioms(const DiversityTable& t, double tol) {
  const std::size_t n = t.size();
  if (n > kMaxAxiomGround) {
    throw DomainError("axiom check is exhaustive and limited to " + std::to_string(kMaxAxiomGround) +
                      " labels");
  }
  std::vector<AxiomViolation> out;
  const Subset all = t.full();
  for (Subset s = 1; s <= all; ++s) {
    if (std::popcount(s) == 1 && std::abs(t[s]) > tol) {
      out.push_back({AxiomViolation::Kind::NonzeroSingleton, s, s, t[s], 0.0});
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Subset bigger = s | (Subset{1} << i);
      if (bigger != s && t[s] > t[bigger] + tol) {
        out.push_back({AxiomViolation::Kind::Monotonicity, s, bigger, t[s], t[bigger]});
      }
    }
    for (Subset u = s + 1; u <= all; ++u) {
      if ((s & u) == 0) continue;
      const double lhs = t[s | u], rhs = t[s] + t[u];
      if (lhs > rhs + tol) out.push_back({AxiomViolation::Kind::Intersecting, s, u, lhs, rhs});
    }
  }
  return out;
}

std::vector<Vector> union_matrix(const DiversityTable& t) {
  const std::size_t m = t.values().size() - 1;
  std::vector<Vector> out(m, Vector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[i][j] = t[static_cast<Subset>((i + 1) | (j + 1))];
  return out;
}

double union_form(const DiversityTable& t, const Vector& x) {
  const std::size_t m = t.values().size() - 1;
  if (x.size() != m) throw DomainError("form vector must have one entry per nonempty subset");
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) total += x[i] * x[j] * t[static_cast<Subset>((i + 1) | (j + 1))];
  return total;
}

NegativeTypeReport negative_type(const DiversityTable& t, std::optional<double> tol) {
  if (t.size() > kMaxNegativeTypeGround) {
    throw DomainError("negative type check is limited to " + std::to_string(kMaxNegativeTypeGround) +
                      " labels");
  }
  NegativeTypeReport report;
  const std::size_t m = t.values().size() - 1;
  if (m == 1) {  // only the zero vector is zero-sum
    report.tolerance = tol.value_or(0.0);
    return report;
  }
  const auto mat = union_matrix(t);
  double scale = 0.0;
  for (const auto& row : mat)
    for (double v : row) scale = std::max(scale, std::abs(v));
  report.tolerance = tol.value_or(1e-9 * scale);

  // P M P with P = I - 11^T / m.
  Vector row_mean(m, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) row_mean[i] += mat[i][j];
    grand += row_mean[i];
    row_mean[i] /= static_cast<double>(m);
  }
  grand /= static_cast<double>(m * m);
  SymmetricMatrix pmp(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) pmp.set(i, j, mat[i][j] - row_mean[i] - row_mean[j] + grand);

  const auto eig = jacobi_eigenvalues(pmp);
  report.max_projected_eigenvalue = eig.values.back();
  report.decision = report.max_projected_eigenvalue <= report.tolerance;
  if (!report.decision) {
    Vector x = eig.vectors.back();
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(m);
    for (double& v : x) v -= mean;
    const double len = norm2(x);
    for (double& v : x) v /= len;
    report.certificate = std::move(x);
  }
  return report;
}

bool linear_embeddable(const DiversityTable& t, std::optional<double> tol) {
  return negative_type(t, tol).decision;
}

bool verify_max_decomposition(const DiversityTable& t, const std::vector<DiversityTable>& parts,
                              double tol) {
  if (parts.empty()) return false;
  for (const auto& p : parts) {
    if (p.ground() != t.ground()) throw DomainError("decomposition parts must share the table's ground list");
  }
  for (Subset s = 1; s <= t.full(); ++s) {
    double best = 0.0;
    for (const auto& p : parts) best = std::max(best, p[s]);
    if (std::abs(best - t[s]) > tol) return false;
  }
  return std::all_of(parts.begin(), parts.end(),
                     [](const DiversityTable& p) { return negative_type(p).decision; });
}

}  // namespace diversity
