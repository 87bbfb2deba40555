#pragma once

#include <cstdint>

namespace polycells::oracle {

/// Colorings of k beads on a ring with q colors, up to rotation and
/// reflection, counted by listing all q^k colorings and their least images.
std::uint64_t bracelet_count(int k, int q);

}  // namespace polycells::oracle
