#pragma once

// Class atlas: one record per class of n-gons with k diagonals, with the
// isotropy report attached, rendered as CSV, JSON or an SVG sheet.

#include <ostream>
#include <vector>

#include <json.hpp>

#include "polycells/classes.hpp"
#include "polycells/isotropy.hpp"
#include "polycells/tables.hpp"

namespace polycells {

struct AtlasRecord {
  ClassRecord cls;
  IsotropyDescriptor isotropy;
  Integer kappa_check;  // n 2^{k+1} / |group|

  bool consistent() const { return kappa_check == cls.kappa; }
};

std::vector<AtlasRecord> build_atlas(int n, int k);

/// Header: n,k,i,label,code,kappa,signature,diagonals,z2Count,dihedralOrder,order,kappaCheck
void write_atlas_csv(std::ostream& out, const std::vector<AtlasRecord>& atlas);
nlohmann::json atlas_json(int n, int k, const std::vector<AtlasRecord>& atlas);
/// Grid of regular polygons with the representative's diagonals drawn as
/// chords, each captioned with its label and kappa.
void write_atlas_svg(std::ostream& out, int n, int k, const std::vector<AtlasRecord>& atlas);

/// "(a b) (c d)"
std::string diagonal_list(const Dissection& D);

}  // namespace polycells
