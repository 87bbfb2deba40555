#pragma once

// Dissections of a convex polygon by pairwise noncrossing diagonals.
//
// Polygon vertices are 0..n-1 in counterclockwise order; side s joins
// vertices s and s+1 (mod n).

#include <compare>
#include <string>
#include <vector>

#include "polycells/types.hpp"

namespace polycells {

struct Diagonal {
  int a;
  int b;  // a < b

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Normalized diagonal {u, w} with u != w.
Diagonal make_diagonal(int u, int w);
/// Whether two chords of a convex polygon cross in their interiors.
bool crosses(Diagonal d, Diagonal e);

class Dissection {
 public:
  /// Validates: n >= 3, every diagonal joins nonadjacent vertices, no two cross.
  Dissection(int n, std::vector<Diagonal> diagonals);
  explicit Dissection(int n) : Dissection(n, {}) {}

  int n() const { return n_; }
  int k() const { return static_cast<int>(diagonals_.size()); }
  /// Sorted ascending.
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  bool contains(Diagonal d) const;
  /// "n:{(a,b),(c,d)}"
  std::string to_string() const;

  friend auto operator<=>(const Dissection&, const Dissection&) = default;

 private:
  int n_;
  std::vector<Diagonal> diagonals_;
};

bool is_side(int n, Diagonal d);

/// All dissections of the n-gon with exactly k diagonals, in lexicographic
/// order of their sorted diagonal lists. n >= 3, 0 <= k <= n-3.
std::vector<Dissection> enumerate_dissections(int n, int k);

/// Reflects the vertices a..b on one side of d = (a, b) by v -> a+b-v and
/// reglues. Throws if d is not a diagonal of D.
Dissection twist(const Dissection& D, Diagonal d);
/// v -> v + steps (mod n)
Dissection rotate(const Dissection& D, int steps);
/// v -> -v (mod n)
Dissection reflect(const Dissection& D);

/// Cells as vertex lists in counterclockwise order, each starting at its smallest vertex.
std::vector<std::vector<int>> cells(const Dissection& D);
TypeSignature signature(const Dissection& D);

}  // namespace polycells
