#pragma once

// Unlabeled free trees by exhaustive growth: every tree on m vertices comes
// from one on m-1 vertices by attaching a leaf, and duplicates are removed by
// a canonical string of the tree rooted at its center.

#include <map>
#include <string>
#include <vector>

#include "polycells/hitrees.hpp"
#include "polycells/number.hpp"

namespace polycells::oracle {

using Adjacency = std::vector<std::vector<int>>;

std::string canonical_tree_string(const Adjacency& tree);

/// All pairwise non-isomorphic trees on m >= 1 vertices.
std::vector<Adjacency> free_trees(int m);

/// Trees without degree-2 vertices on 2..max_vertices vertices, tallied by
/// degree partition.
std::map<DegreePartition, Integer> hi_tree_census(int max_vertices);

}  // namespace polycells::oracle
