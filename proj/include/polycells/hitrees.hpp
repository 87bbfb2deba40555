#pragma once

// Homeomorphically irreducible trees (no vertex of degree two) counted by
// degree partition, labeled phylogeny counts, and the commutative bracketing
// numbers read off the A-cluster series.

#include <compare>
#include <map>
#include <string>

#include "polycells/number.hpp"
#include "polycells/series.hpp"

namespace polycells {

struct DegreePartition {
  int m = 0;               // vertices
  int m1 = 0;              // leaves
  std::map<int, int> mi;   // degree i >= 3 -> count

  /// m = m1 + sum m_i and m1 + sum i m_i = 2(m - 1)
  bool valid() const;
  /// "m: t1^{m1} t3^{m3} ..."
  std::string to_string() const;

  friend auto operator<=>(const DegreePartition&, const DegreePartition&) = default;
};

/// H(x, t1, t3, ...) truncated at max_vertices (2..15), from
///   P = x(t1 + sum_d t_d h_{d-1}[P]),  R = x(t1 P + sum_d t_d h_d[P]),
///   H = R - (1/2)(P^2 - P(all variables squared)).
MultivariateSeries hi_tree_series(int max_vertices);

/// Coefficients of H keyed by degree partition.
std::map<DegreePartition, Integer> degree_partition_counts(const MultivariateSeries& H);

/// Trees dual to codim-k faces of K_n: n+1 leaves, k+1 internal vertices.
std::map<DegreePartition, Integer> trees_for_face_census(int n, int k);

/// Leaf-labeled homeomorphically irreducible trees with n labeled leaves.
Integer phylo_count(int n);
/// Rooted phylogenies on n labeled leaves: T_{n+1}.
Integer rooted_phylo_count(int n);

/// a_{n-1, n}, computed from a fresh A series of sufficient size.
Integer wedderburn(int n);
/// a_{n-1, n} read from a given A series; throws if A is too small.
Integer wedderburn(int n, const BivariateSeries& A);
/// Ways to place k brackets on n commuting variables: a_{k+1, n}.
Integer brackets_on_commuting(int k, int n, const BivariateSeries& A);

}  // namespace polycells
