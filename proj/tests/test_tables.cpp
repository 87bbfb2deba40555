#include <doctest.h>

#include <sstream>

#include "polycells/atlas.hpp"
#include "polycells/tables.hpp"

using namespace polycells;

namespace {

const ClusterSeriesSet& S() {
  static const ClusterSeriesSet s = compute_cluster_series();
  return s;
}

}  // namespace

TEST_CASE("table ids") {
  for (const char* name : {"a", "v", "b", "f", "dissections"}) {
    auto id = parse_table_id(name);
    REQUIRE(id);
    CHECK(table_name(*id) == name);
  }
  CHECK_FALSE(parse_table_id("x"));
}

TEST_CASE("series table layouts") {
  struct Layout { TableId id; int first; int last; int cols; };
  for (auto [id, first, last, cols] : {Layout{TableId::a, 2, 13, 12}, Layout{TableId::v, 2, 12, 11},
                                       Layout{TableId::b, 3, 14, 12}, Layout{TableId::f, 3, 15, 13}}) {
    const auto grid = series_table(id, S());
    REQUIRE(grid.rows.size() == static_cast<std::size_t>(last - first + 1));
    CHECK(grid.header.size() == static_cast<std::size_t>(cols + 1));
    CHECK(grid.rows.front().label == std::to_string(first));
    CHECK(grid.rows.back().label == std::to_string(last));
    for (const auto& row : grid.rows) CHECK(row.cells.size() == static_cast<std::size_t>(cols));
  }
  CHECK_THROWS_AS(series_table(TableId::dissections, S()), std::invalid_argument);
  CHECK_THROWS_AS(series_table(TableId::f, compute_cluster_series({6, 8})), std::out_of_range);
}

TEST_CASE("blank cells") {
  const auto f = series_table(TableId::f, S());
  CHECK_FALSE(f.rows[0].cells[1].has_value());
  CHECK(f.rows[0].cells[0] == Integer(1));
  CHECK(f.rows[3].cells[3] == Integer(2));
}

TEST_CASE("dissection type table") {
  const auto grid = dissection_type_table();
  CHECK(grid.header.size() == 10);
  CHECK(grid.header.front() == "polygon");
  CHECK(grid.header.back() == "total");
  const auto& first = grid.rows.front();
  CHECK(first.label == "5");
  CHECK(first.cells[0] == Integer(3));
  CHECK(first.cells.back() == Integer(5));
  CHECK_THROWS(dissection_type_table(7, 5));
}

TEST_CASE("csv and json") {
  const auto grid = series_table(TableId::v, S());
  std::ostringstream csv;
  write_csv(csv, grid);
  CHECK(csv.str().rfind("n,1,2,3", 0) == 0);
  CHECK(csv.str().find("\n2,1,,") != std::string::npos);
  const auto j = to_json(grid);
  CHECK(j["schemaVersion"] == 1);
  CHECK(j["rows"].size() == grid.rows.size());
  CHECK(json_integer(Integer(42)) == 42);
  CHECK(json_integer(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("atlas") {
  const auto atlas = build_atlas(6, 3);
  REQUIRE(atlas.size() == 2);
  for (const auto& r : atlas) CHECK(r.consistent());
  std::ostringstream csv;
  write_atlas_csv(csv, atlas);
  CHECK(csv.str().rfind("n,k,i,label,code,kappa,signature,diagonals,z2Count,dihedralOrder,order,kappaCheck\n", 0) == 0);
  CHECK(atlas_json(6, 3, atlas)["schemaVersion"] == 1);
  std::ostringstream svg1, svg2;
  write_atlas_svg(svg1, 6, 3, atlas);
  write_atlas_svg(svg2, 6, 3, build_atlas(6, 3));
  CHECK(svg1.str() == svg2.str());
  CHECK(svg1.str().find("<svg") != std::string::npos);
  CHECK(diagonal_list(Dissection(6, {make_diagonal(0, 2), make_diagonal(0, 3)})) == "(0 2) (0 3)");
}
