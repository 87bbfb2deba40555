#pragma once

// Cycle indices of the permutation groups used in the cluster and tree
// enumerations, and plethystic substitution of a figure-counting series.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polycells/number.hpp"
#include "polycells/series.hpp"

namespace polycells {

/// A cycle type as sorted (cycle length r, multiplicity e) pairs, r ascending.
using CycleType = std::vector<std::pair<int, int>>;

class CycleIndex {
 public:
  explicit CycleIndex(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<CycleType, Rational>& terms() const { return terms_; }

  /// Adds c * prod s_r^{e_r}. Throws if the term does not permute `degree` sites.
  void add_term(CycleType type, const Rational& c);
  Rational coefficient(const CycleType& type) const;
  Rational coefficient_sum() const;
  /// Value with every s_r replaced by q: the number of q-colorings up to the group.
  Rational evaluate_uniform(const Rational& q) const;
  std::string to_string() const;

  friend bool operator==(const CycleIndex&, const CycleIndex&) = default;

 private:
  int degree_;
  std::map<CycleType, Rational> terms_;
};

int euler_phi(int r);

/// The order-2 group reversing k sites about a root edge; k >= 2.
CycleIndex root_edge_cycle_index(int k);
/// Dihedral group of order 2k on the k sites of a cell; k >= 3.
CycleIndex dihedral_cycle_index(int k);
/// Full symmetric group on n sites; n >= 0.
CycleIndex symmetric_cycle_index(int n);

/// Caches the power-substituted copies of one figure series and their powers,
/// so that many cycle indices can be evaluated against the same figure.
template <class Series>
class Plethysm {
 public:
  explicit Plethysm(Series figure) : figure_(std::move(figure)) {}

  Series operator()(const CycleIndex& z) {
    Series total = zero_like(figure_);
    for (const auto& [type, c] : z.terms()) {
      Series term = unit_like(figure_);
      for (const auto& [r, e] : type) term = mul(term, power(r, e));
      term *= c;
      total += term;
    }
    return total;
  }

  /// (figure with all variables raised to r)^e
  const Series& power(int r, int e) {
    auto& row = powers_[r];
    if (row.empty()) {
      row.push_back(unit_like(figure_));
      row.push_back(power_substitute(figure_, r));
    }
    while (static_cast<int>(row.size()) <= e) row.push_back(mul(row.back(), row[1]));
    return row[e];
  }

 private:
  Series figure_;
  std::map<int, std::vector<Series>> powers_;
};

BivariateSeries plethysm(const CycleIndex& z, const BivariateSeries& figure);
MultivariateSeries plethysm(const CycleIndex& z, const MultivariateSeries& figure);

}  // namespace polycells
