#include <doctest.h>

#include <set>

#include "dissection_orbits.hpp"
#include "polycells/census.hpp"
#include "polycells/classes.hpp"
#include "polycells/isotropy.hpp"

using namespace polycells;

namespace {

Dissection make(int n, std::initializer_list<std::pair<int, int>> ds) {
  std::vector<Diagonal> v;
  for (auto [a, b] : ds) v.push_back(make_diagonal(a, b));
  return Dissection(n, v);
}

LabeledDissection identity_labels(const Dissection& D) {
  std::vector<int> labels(D.n());
  for (int i = 0; i < D.n(); ++i) labels[i] = i;
  return {D, labels};
}

}  // namespace

TEST_CASE("undissected polygon") {
  for (int n = 3; n <= 12; ++n) {
    const auto g = isotropy_group(Dissection(n));
    CHECK(g.order == 2 * n);
    CHECK(g.dihedral_order == n);
    CHECK(g.z2_count == 0);
    CHECK(kappa_from_isotropy(n, 0, g) == 1);
    CHECK(g.to_string() == "D" + std::to_string(n));
  }
}

TEST_CASE("hexagon examples") {
  const auto central = isotropy_group(make(6, {{0, 2}, {2, 4}, {0, 4}}));
  CHECK(central.order == 48);
  CHECK(central.to_string() == "Z2^3 x D3");
  CHECK(kappa_from_isotropy(6, 3, central) == 2);
  CHECK(central.center.kind == CenterKind::cell);

  const auto fan = isotropy_group(make(6, {{0, 2}, {0, 3}, {0, 4}}));
  CHECK(fan.order == 8);
  CHECK(kappa_from_isotropy(6, 3, fan) == 12);
  CHECK(fan.center.kind == CenterKind::diagonal);
}

TEST_CASE("square with one diagonal") {
  const auto g = isotropy_group(make(4, {{0, 2}}));
  CHECK(g.order == 8);
  CHECK(kappa_from_isotropy(4, 1, g) == 2);
}

TEST_CASE("nonagon with a central triangle") {
  const auto g = isotropy_group(make(9, {{0, 3}, {3, 6}, {0, 6}, {0, 2}, {3, 5}, {6, 8}}));
  CHECK(g.to_string() == "Z2^3 x D3");
  CHECK(g.order == 48);
  CHECK(kappa_from_isotropy(9, 6, g) == 24);
}

TEST_CASE("kappa needs a dividing order") {
  IsotropyDescriptor g;
  g.order = 7;
  CHECK_THROWS_AS(kappa_from_isotropy(6, 1, g), std::logic_error);
}

TEST_CASE("group is a class invariant and predicts kappa") {
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; k <= n - 3; ++k)
      for (const auto& c : enumerate_classes(n, k)) {
        CAPTURE(c.label());
        const auto g = isotropy_group(c.representative);
        CHECK(kappa_from_isotropy(n, k, g) == c.kappa);
        CHECK_FALSE(g.rotation_promoted);
        std::set<std::string> seen;
        for (const auto& D : enumerate_dissections(n, k))
          if (class_code(D) == c.code) seen.insert(isotropy_group(D).to_string() + "/" + isotropy_group(D).order.get_str());
        CHECK(seen.size() == 1);
      }
}

TEST_CASE("order matches the brute-force stabilizer") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 0; k <= n - 3; ++k)
      for (const auto& c : enumerate_classes(n, k)) {
        CAPTURE(c.label());
        CHECK(isotropy_group(c.representative).order == oracle::stabilizer_order(identity_labels(c.representative)));
      }
}
