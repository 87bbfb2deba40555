#pragma once

// Isotropy groups of moduli-space faces under relabeling, computed locally
// (mirror symmetry of each cell with everything hanging from it) and globally
// (symmetry at the tree center), then combined as a direct product.

#include <optional>
#include <string>

#include "polycells/dissection.hpp"
#include "polycells/number.hpp"
#include "polycells/plane_tree.hpp"

namespace polycells {

struct IsotropyDescriptor {
  int z2_count = 0;
  std::optional<int> dihedral_order;  // j of a D_j factor at the central cell
  Integer order = 1;                  // 2^z2_count * (2j if dihedral)
  Center center{CenterKind::cell, 0};
  // The central cell had rotational symmetry without any reflection and was
  // promoted to dihedral anyway. The kappa cross-check exposes this case.
  bool rotation_promoted = false;

  /// e.g. "Z2^3 x D3", "Z2", "1"
  std::string to_string() const;
};

IsotropyDescriptor isotropy_group(const Dissection& rep);

/// n * 2^{k+1} / |group|; throws std::logic_error when the order does not divide.
Integer kappa_from_isotropy(int n, int k, const IsotropyDescriptor& g);

}  // namespace polycells
