#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diversity/diversity.hpp"

namespace diversity {

inline constexpr std::size_t kMaxGround = 20;
inline constexpr std::size_t kMaxNegativeTypeGround = 8;
inline constexpr std::size_t kMaxAxiomGround = 12;

using Subset = std::uint32_t;  // bit i <-> ground[i]

/// Finite diversity given as an explicit table. Values are indexed by bitmask
/// over the ordered ground list; values[0] is the empty set and always 0.
class DiversityTable {
 public:
  /// `values` has 2^n entries. Throws DomainError on duplicate labels, n = 0,
  /// n > kMaxGround, or negative / non-finite values.
  DiversityTable(std::vector<std::string> ground, std::vector<double> values);

  static DiversityTable from_function(std::vector<std::string> ground,
                                      const std::function<double(Subset)>& value);

  std::size_t size() const noexcept { return ground_.size(); }
  const std::vector<std::string>& ground() const noexcept { return ground_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](Subset s) const { return values_.at(s); }
  Subset full() const noexcept { return static_cast<Subset>((1u << ground_.size()) - 1); }

  /// Bitmask of the given labels; DomainError on an unknown label.
  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;

  DiversityTable scaled(double c) const;

 private:
  std::vector<std::string> ground_;
  std::vector<double> values_;
};

/// Table of spec values on every subset of the labelled points.
DiversityTable restrict(const DiversitySpec& spec,
                        const std::vector<std::pair<std::string, Vector>>& labelled);

struct AxiomViolation {
  enum class Kind {
    NonzeroSingleton,  // D1
    Negative,
    Monotonicity,      // D3: delta(s) > delta(t) with s inside t
    Intersecting,      // D4: delta(s | t) > delta(s) + delta(t) with s & t nonempty
  };
  Kind kind;
  Subset s = 0;
  Subset t = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

std::string to_string(AxiomViolation::Kind k);

/// Every D1, D3 and D4 violation beyond tol. D3 is checked on covering pairs
/// (S, S + x), which implies it for all pairs; D4 is exhaustive over pairs, so
/// tables larger than kMaxAxiomGround throw DomainError.
std::vector<AxiomViolation> check_table_axioms(const DiversityTable& t, double tol = 1e-9);

struct NegativeTypeReport {
  bool decision = true;
  double max_projected_eigenvalue = 0.0;
  double tolerance = 0.0;
  /// Zero-sum vector over nonempty subsets (entry i <-> mask i + 1); empty when
  /// the decision is true.
  Vector certificate;
};

/// M[S][T] = delta(S | T) over nonempty subsets S, T.
std::vector<Vector> union_matrix(const DiversityTable& t);

/// x^T M x for x indexed by nonempty subsets.
double union_form(const DiversityTable& t, const Vector& x);

/// Max eigenvalue of P M P, P the projector onto zero-sum vectors, against
/// tol (default 1e-9 * max|M|). Throws DomainError above kMaxNegativeTypeGround.
NegativeTypeReport negative_type(const DiversityTable& t, std::optional<double> tol = std::nullopt);

/// Same decision as negative_type: a finite diversity embeds in a linear
/// diversity exactly when it has negative type.
bool linear_embeddable(const DiversityTable& t, std::optional<double> tol = std::nullopt);

/// True iff every part has negative type and their pointwise max equals t
/// within tol. DomainError when a part has a different ground list.
bool verify_max_decomposition(const DiversityTable& t, const std::vector<DiversityTable>& parts,
                              double tol = 1e-9);

}  // namespace diversity
