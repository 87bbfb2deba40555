#pragma once

// Published reference values for the cluster tables and the table of
// dissections by type, transcribed verbatim (misprints included).

#include <array>
#include <map>
#include <vector>

namespace polycells::oracle {

/// Row n -> entries for m = 1, 2, ...
using PrintedSeriesTable = std::map<int, std::vector<long>>;

const PrintedSeriesTable& printed_a();  // rows 2..13
const PrintedSeriesTable& printed_v();  // rows 2..12
const PrintedSeriesTable& printed_b();  // rows 3..14
const PrintedSeriesTable& printed_f();  // rows 3..15

struct PrintedTypeRow {
  int polygon;
  std::array<int, 8> multiplicity;  // cell sizes 3..10
  long count;
};

/// Polygons 5..10, in printed order.
const std::vector<PrintedTypeRow>& printed_type_rows();

}  // namespace polycells::oracle
