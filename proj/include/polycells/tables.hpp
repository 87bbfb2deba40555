#pragma once

// Tables of cluster counts and of dissections by type, as row/column grids
// with blank cells where no object exists.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polycells/clusters.hpp"
#include "polycells/number.hpp"

namespace polycells {

enum class TableId { a, v, b, f, dissections };

std::optional<TableId> parse_table_id(std::string_view name);
std::string table_name(TableId id);

struct TableGrid {
  std::string title;
  std::vector<std::string> header;  // header[0] labels the row column
  struct Row {
    std::string label;
    std::vector<std::optional<Integer>> cells;
  };
  std::vector<Row> rows;
};

/// Rows are edge counts n, columns are cell counts m = 1..; cells with no
/// cluster are blank. Layouts: a rows 2..13, v rows 2..12, b rows 3..14,
/// f rows 3..15. Needs series bounds covering the largest row.
TableGrid series_table(TableId id, const ClusterSeriesSet& series);

/// Dissections of the n-gon by type for n = 5..10: one row per type with
/// the multiplicity of each cell size 3..10 and the number of dissections.
/// Within a polygon, rows run from triangulations down to the bare polygon.
TableGrid dissection_type_table(int min_sides = 5, int max_sides = 10);

void write_csv(std::ostream& out, const TableGrid& grid);
nlohmann::json to_json(const TableGrid& grid);

/// A JSON number when the value fits in 64 bits, otherwise its decimal string.
nlohmann::json json_integer(const Integer& z);

}  // namespace polycells
