#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "dissection_orbits.hpp"
#include "generators.hpp"
#include "polycells/classes.hpp"
#include "polycells/dissection.hpp"
#include "polycells/facecount.hpp"
#include "polycells/plane_tree.hpp"

using namespace polycells;

namespace {

Dissection hexagon(std::initializer_list<std::pair<int, int>> ds) {
  std::vector<Diagonal> v;
  for (auto [a, b] : ds) v.push_back(make_diagonal(a, b));
  return Dissection(6, v);
}

std::multiset<Integer> kappas(int n, int k) {
  std::multiset<Integer> out;
  for (const auto& c : enumerate_classes(n, k)) out.insert(c.kappa);
  return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_dissections(6, 1).size() == 9);
  CHECK(enumerate_dissections(6, 3).size() == 14);
  CHECK(enumerate_dissections(6, 0).size() == 1);
  for (int n = 3; n <= 11; ++n)
    for (int k = 0; k <= n - 3; ++k)
      CHECK(Integer(static_cast<long>(enumerate_dissections(n, k).size())) == cayley_faces(n - 1, k));
}

TEST_CASE("enumeration is sorted and distinct") {
  const auto all = enumerate_dissections(8, 3);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Dissection(2), std::invalid_argument);
  CHECK_THROWS_AS(hexagon({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(hexagon({{0, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(hexagon({{0, 3}, {1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(hexagon({{0, 3}, {0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(hexagon({{0, 7}}), std::invalid_argument);
  CHECK_THROWS_AS(make_diagonal(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_dissections(6, 4), std::invalid_argument);
}

TEST_CASE("crossing") {
  CHECK(crosses({0, 3}, {1, 4}));
  CHECK_FALSE(crosses({0, 3}, {3, 5}));
  CHECK_FALSE(crosses({0, 2}, {3, 5}));
  CHECK_FALSE(crosses({0, 3}, {0, 3}));
}

TEST_CASE("twist") {
  const auto D = hexagon({{0, 2}, {0, 3}});
  CHECK(twist(twist(D, {0, 3}), {0, 3}) == D);
  CHECK(twist(D, {0, 3}).k() == 2);
  CHECK(twist(D, {0, 3}) == hexagon({{0, 3}, {1, 3}}));
  CHECK_THROWS(twist(D, {1, 4}));
}

TEST_CASE("rotation and reflection") {
  const auto D = hexagon({{0, 2}, {0, 3}});
  CHECK(rotate(D, 6) == D);
  CHECK(rotate(D, 1) == hexagon({{1, 3}, {1, 4}}));
  CHECK(reflect(reflect(D)) == D);
  CHECK(reflect(D) == hexagon({{0, 4}, {0, 3}}));
}

TEST_CASE("cells") {
  const auto c = cells(hexagon({{0, 2}, {2, 4}, {0, 4}}));
  REQUIRE(c.size() == 4);
  CHECK(std::count(c.begin(), c.end(), std::vector<int>{0, 2, 4}) == 1);
  CHECK(signature(hexagon({{0, 3}})).to_string() == "<4^2>");
}

TEST_CASE("dual tree") {
  const auto central = dual_tree(hexagon({{0, 2}, {2, 4}, {0, 4}}));
  CHECK(central.internal_count == 4);
  CHECK(central.nodes.size() == 10);
  const auto c = tree_center(central);
  CHECK(c.kind == CenterKind::cell);
  CHECK(central.nodes[c.cell].cell_vertices == std::vector<int>{0, 2, 4});
  for (int v = 0; v < central.internal_count; ++v) CHECK(central.degree(v) == 3);

  const auto fan = dual_tree(hexagon({{0, 2}, {0, 3}, {0, 4}}));
  CHECK(tree_center(fan).kind == CenterKind::diagonal);

  const auto bare = dual_tree(Dissection(7));
  CHECK(bare.internal_count == 1);
  CHECK(bare.degree(0) == 7);
}

TEST_CASE("class codes") {
  const auto fan = hexagon({{0, 2}, {0, 3}, {0, 4}});
  const auto zigzag = hexagon({{0, 2}, {2, 5}, {2, 4}});
  const auto central = hexagon({{0, 2}, {2, 4}, {0, 4}});
  CHECK(class_code(fan) == class_code(zigzag));
  CHECK(class_code(fan) != class_code(central));
  CHECK(class_code(rotate(central, 1)) == class_code(central));
}

TEST_CASE("class lists") {
  CHECK(kappas(6, 3) == std::multiset<Integer>{2, 12});
  CHECK(kappas(6, 1) == std::multiset<Integer>{3, 6});
  CHECK(enumerate_classes(10, 6).size() == 52);
  const auto classes = enumerate_classes(7, 2);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CHECK(classes[i].index == static_cast<int>(i) + 1);
    CHECK(classes[i].label() == "7.2." + std::to_string(i + 1));
    CHECK(class_code(classes[i].representative) == classes[i].code);
    CHECK(signature(classes[i].representative) == classes[i].signature);
  }
}

TEST_CASE("kappa sums to the face count") {
  for (int n = 3; n <= 10; ++n)
    for (int k = 0; k <= n - 3; ++k) {
      Integer total = 0;
      for (const auto& c : enumerate_classes(n, k)) total += c.kappa;
      CHECK(total == cayley_faces(n - 1, k));
    }
}

TEST_CASE("classes match orbits of the generating moves") {
  for (int n = 3; n <= 9; ++n)
    for (int k = 0; k <= n - 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      std::multiset<Integer> oracle;
      for (auto s : oracle::class_orbit_sizes(n, k)) oracle.insert(Integer(static_cast<long>(s)));
      CHECK(kappas(n, k) == oracle);
    }
}

TEST_CASE("grown representatives agree") {
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; k <= n - 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      std::set<ClassCode> grown;
      for (const auto& D : grow_class_representatives(n, k)) grown.insert(class_code(D));
      std::set<ClassCode> listed;
      for (const auto& c : enumerate_classes(n, k)) listed.insert(c.code);
      CHECK(grown == listed);
    }
}

TEST_CASE("class code is invariant under the moves") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto D = oracle::random_dissection(rng, 3, 14);
    const auto code = class_code(D);
    CHECK(class_code(rotate(D, static_cast<int>(rng() % D.n()))) == code);
    CHECK(class_code(reflect(D)) == code);
    for (const auto& d : D.diagonals()) CHECK(class_code(twist(D, d)) == code);
  }
}
