#pragma once

// The weak dual of a dissection, kept as a plane tree: one internal vertex per
// cell, one leaf per polygon side, one edge per diagonal or side, and the
// counterclockwise order of edges around each internal vertex.

#include <string>
#include <vector>

#include "polycells/dissection.hpp"

namespace polycells {

struct PlaneTree {
  struct Node {
    int cell_size = 0;               // 0 for leaves
    int side = -1;                   // polygon side, leaves only
    std::vector<int> cell_vertices;  // internal only, counterclockwise
    std::vector<int> nbrs;           // cyclic (counterclockwise) for internal nodes
  };

  int polygon_sides = 0;
  int internal_count = 0;  // internal nodes occupy ids [0, internal_count)
  std::vector<Node> nodes;

  bool is_leaf(int v) const { return v >= internal_count; }
  int degree(int v) const { return static_cast<int>(nodes[v].nbrs.size()); }
  /// Neighbours of internal v in cyclic order, starting just after `parent`.
  std::vector<int> children(int v, int parent) const;
  bool adjacent(int u, int v) const;
};

PlaneTree dual_tree(const Dissection& D);

enum class CenterKind { cell, diagonal };

/// Center of the tree of cells: either one cell or the diagonal joining two cells.
struct Center {
  CenterKind kind;
  int cell;        // the central cell, or one end of the central diagonal
  int other = -1;  // the other end of the central diagonal

  friend bool operator==(const Center&, const Center&) = default;
};

/// Minimum-eccentricity vertices of the internal (cell) subtree.
Center tree_center(const PlaneTree& t);

/// Code of the subtree hanging from v away from `parent`, canonical under
/// reflecting the cyclic order at any vertex of the subtree. Leaves are "L".
std::string rooted_code(const PlaneTree& t, int v, int parent);
/// Codes of children(v, parent), in that cyclic order.
std::vector<std::string> child_codes(const PlaneTree& t, int v, int parent);

}  // namespace polycells
