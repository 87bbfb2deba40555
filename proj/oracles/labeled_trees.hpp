#pragma once

// Leaf-labeled trees without degree-2 vertices, generated explicitly: the
// trees on n labeled leaves are obtained from those on n-1 leaves by hanging
// leaf n-1 off an existing internal vertex or off a new vertex subdividing
// an edge. Results are deduplicated by a canonical string.

#include <cstdint>
#include <string>
#include <vector>

namespace polycells::oracle {

struct LeafLabeledTree {
  int leaves = 0;                       // vertices 0..leaves-1 are the labeled leaves
  std::vector<std::vector<int>> adj;    // internal vertices follow the leaves

  bool binary() const;
  std::string canonical() const;
};

/// Every leaf-labeled tree with n >= 2 leaves and no degree-2 vertex.
std::vector<LeafLabeledTree> leaf_labeled_trees(int n);

struct LeafLabeledCounts {
  std::uint64_t all = 0;
  std::uint64_t binary = 0;
};
LeafLabeledCounts count_leaf_labeled_trees(int n);

/// Rooted binary trees on the labeled leaves 0..n-1, written out by splitting
/// each leaf set into two blocks in every way and deduplicating the strings.
std::uint64_t count_rooted_binary_trees(int n);

}  // namespace polycells::oracle
