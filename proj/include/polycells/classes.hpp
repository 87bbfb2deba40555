#pragma once

// Classes of dissections: orbits under the dihedral group of the polygon
// together with all twists. A class is identified by a canonical code of the
// dual plane tree taken up to independent reflection at every cell.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "polycells/dissection.hpp"
#include "polycells/number.hpp"
#include "polycells/plane_tree.hpp"
#include "polycells/types.hpp"

namespace polycells {

class ClassCode {
 public:
  ClassCode() = default;
  explicit ClassCode(std::string bytes) : bytes_(std::move(bytes)) {}
  const std::string& str() const { return bytes_; }
  friend auto operator<=>(const ClassCode&, const ClassCode&) = default;

 private:
  std::string bytes_;
};

/// Rooted at the tree center; every subtree takes the smaller of its two
/// mirror readings and the center takes the least rotation/reflection.
ClassCode class_code(const PlaneTree& t);
ClassCode class_code(const Dissection& D);

struct ClassRecord {
  ClassCode code;
  int n = 0;
  int k = 0;
  int index = 0;  // 1-based, by code order within (n, k)
  Dissection representative{3};
  Integer kappa;  // dissections of the fixed n-gon in this class
  TypeSignature signature;

  /// "n.k.i"
  std::string label() const;
};

/// Largest polygon enumerate_classes accepts; every dissection is visited.
inline constexpr int kMaxClassPolygon = 13;

/// One record per class of n-gons with k diagonals, sorted by code. The
/// representative is the lexicographically least dissection of the class.
/// Throws std::domain_error for n > kMaxClassPolygon.
std::vector<ClassRecord> enumerate_classes(int n, int k);

/// Independent route to the class list: grows edge-rooted plane trees height
/// by height, discarding mirror duplicates at each stage, assembles free trees
/// around a root cell and weeds out repeated classes by code. Practical for n <= 8.
std::vector<Dissection> grow_class_representatives(int n, int k);

/// Number of edge-rooted shapes (up to reflection at every cell) produced by
/// the same growth, keyed by (cells, leaves) for leaves <= max_leaves. These
/// are the A-clusters, so the counts should equal a_{m,n}.
std::map<std::pair<int, int>, Integer> grown_edge_rooted_counts(int max_leaves);

}  // namespace polycells
