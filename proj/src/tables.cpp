#include "polycells/tables.hpp"

#include <stdexcept>

#include "polycells/types.hpp"

namespace polycells {

std::optional<TableId> parse_table_id(std::string_view name) {
  if (name == "a") return TableId::a;
  if (name == "v") return TableId::v;
  if (name == "b") return TableId::b;
  if (name == "f") return TableId::f;
  if (name == "dissections") return TableId::dissections;
  return std::nullopt;
}

std::string table_name(TableId id) {
  switch (id) {
    case TableId::a: return "a";
    case TableId::v: return "v";
    case TableId::b: return "b";
    case TableId::f: return "f";
    case TableId::dissections: return "dissections";
  }
  return "";
}

TableGrid series_table(TableId id, const ClusterSeriesSet& series) {
  const BivariateSeries* s = nullptr;
  int first = 0, last = 0, unused_cells = 0;
  switch (id) {
    case TableId::a: s = &series.A; first = 2; last = 13; unused_cells = 1; break;
    case TableId::v: s = &series.V; first = 2; last = 12; unused_cells = 1; break;
    case TableId::b: s = &series.B; first = 3; last = 14; unused_cells = 2; break;
    case TableId::f: s = &series.F; first = 3; last = 15; unused_cells = 2; break;
    case TableId::dissections: throw std::invalid_argument("series_table: not a series table");
  }
  const int columns = last - unused_cells;
  if (columns > s->max_cell_deg() || last > s->max_edge_deg())
    throw std::out_of_range("series_table: series bounds too small for table " + table_name(id));

  TableGrid grid;
  grid.title = table_name(id) + "_{m,n}";
  grid.header.push_back("n");
  for (int m = 1; m <= columns; ++m) grid.header.push_back(std::to_string(m));
  for (int n = first; n <= last; ++n) {
    TableGrid::Row row{std::to_string(n), {}};
    for (int m = 1; m <= columns; ++m) {
      if (m <= n - unused_cells)
        row.cells.emplace_back(s->coefficient(m, n).get_num());
      else
        row.cells.emplace_back(std::nullopt);
    }
    grid.rows.push_back(std::move(row));
  }
  return grid;
}

TableGrid dissection_type_table(int min_sides, int max_sides) {
  if (min_sides < 3 || max_sides < min_sides)
    throw std::invalid_argument("dissection_type_table: bad polygon range");
  TableGrid grid;
  grid.title = "dissections by type";
  grid.header.push_back("polygon");
  for (int i = 3; i <= max_sides; ++i) grid.header.push_back(std::to_string(i));
  grid.header.push_back("total");
  for (int sides = min_sides; sides <= max_sides; ++sides) {
    const int n = sides - 1;
    for (int k = n - 2; k >= 0; --k) {
      for (const auto& sig : type_signatures(n, k)) {
        TableGrid::Row row{std::to_string(sides), {}};
        for (int i = 3; i <= max_sides; ++i) {
          auto it = sig.multiplicities().find(i);
          if (it == sig.multiplicities().end())
            row.cells.emplace_back(std::nullopt);
          else
            row.cells.emplace_back(Integer(it->second));
        }
        row.cells.emplace_back(type_face_count(sig));
        grid.rows.push_back(std::move(row));
      }
    }
  }
  return grid;
}

void write_csv(std::ostream& out, const TableGrid& grid) {
  for (std::size_t c = 0; c < grid.header.size(); ++c) out << (c ? "," : "") << grid.header[c];
  out << '\n';
  for (const auto& row : grid.rows) {
    out << row.label;
    for (const auto& cell : row.cells) {
      out << ',';
      if (cell) out << cell->get_str();
    }
    out << '\n';
  }
}

nlohmann::json json_integer(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

nlohmann::json to_json(const TableGrid& grid) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : grid.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : row.cells) cells.push_back(cell ? json_integer(*cell) : nlohmann::json(nullptr));
    rows.push_back({{"label", row.label}, {"cells", cells}});
  }
  return {{"schemaVersion", 1}, {"title", grid.title}, {"header", grid.header}, {"rows", rows}};
}

}  // namespace polycells
