#pragma once

// Labeled dissections and the faces of the real moduli space they represent.
//
// A labeled n-gon carries the labels 0..n-1 on its sides. Two labeled
// dissections give the same face when they are related by rotations,
// reflection and twists.

#include <cstdint>
#include <string>
#include <vector>

#include "polycells/dissection.hpp"
#include "polycells/number.hpp"

namespace polycells {

struct LabeledDissection {
  Dissection shape;
  std::vector<int> side_labels;  // side_labels[s] is the label on side s

  friend auto operator<=>(const LabeledDissection&, const LabeledDissection&) = default;
};

LabeledDissection rotate(const LabeledDissection& L, int steps);
LabeledDissection reflect(const LabeledDissection& L);
LabeledDissection twist(const LabeledDissection& L, Diagonal d);
/// Applies a label permutation: label l becomes perm[l].
LabeledDissection relabel(const LabeledDissection& L, const std::vector<int>& perm);

/// Largest polygon the labeled census accepts.
inline constexpr int kMaxCensusPolygon = 7;

/// Number of orbits of labeled n-gon dissections with k diagonals under
/// rotations, reflection and twists, found by breadth-first closure.
/// Throws std::domain_error for n > kMaxCensusPolygon.
Integer labeled_moduli_census(int n, int k);

/// Canonical identifier of the face a labeled dissection represents: the
/// leaf-labeled dual tree, read from the leaf labeled 0, taking the smaller
/// mirror reading at each cell.
std::string labeled_face_key(const LabeledDissection& L);

}  // namespace polycells
