#pragma once

// Orbit computations straight from the generating moves (rotation by one
// step, reflection, and a twist along each diagonal), with no canonical
// codes involved.

#include <cstddef>
#include <set>
#include <vector>

#include "polycells/census.hpp"
#include "polycells/dissection.hpp"
#include "polycells/number.hpp"

namespace polycells::oracle {

/// Orbit sizes of n-gon dissections with k diagonals, ascending.
std::vector<std::size_t> class_orbit_sizes(int n, int k);

/// Dissections of a polygon with `sides` sides into `cells` cells with one
/// cell marked, up to the moves above carrying the mark along.
Integer cell_rooted_count(int sides, int cells);

/// All labeled dissections reachable from L by the moves above.
std::set<LabeledDissection> face_orbit(const LabeledDissection& L);

/// Number of label permutations sigma with sigma(L) in the orbit of L.
Integer stabilizer_order(const LabeledDissection& L);

}  // namespace polycells::oracle
