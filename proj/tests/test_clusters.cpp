#include <doctest.h>

#include "dissection_orbits.hpp"
#include "polycells/classes.hpp"
#include "polycells/clusters.hpp"
#include "polycells/facecount.hpp"

using namespace polycells;

namespace {

const ClusterSeriesSet& S() {
  static const ClusterSeriesSet s = compute_cluster_series();
  return s;
}

}  // namespace

TEST_CASE("A") {
  CHECK(S().A.coefficient(0, 1) == 1);
  CHECK(S().A.coefficient(1, 2) == 1);
  CHECK(S().A.coefficient(3, 4) == 2);
  CHECK(S().A.coefficient(4, 5) == 3);
  CHECK(S().A.coefficient(7, 8) == 23);
}

TEST_CASE("V and its closed form") {
  CHECK(S().V.coefficient(2, 4) == 5);
  CHECK(S().V.coefficient(3, 5) == 21);
  for (int n = 2; n <= 16; ++n) CHECK(S().V.coefficient(1, n) == 1);
  CHECK(closed_form_v(0, 1) == 1);
  CHECK(closed_form_v(0, 2) == 0);
  CHECK(closed_form_v(3, 3) == 0);
}

TEST_CASE("V counts faces of K_n") {
  for (int n = 2; n <= 13; ++n)
    for (int k = 0; k <= n - 2; ++k) CHECK(S().V.coefficient(k + 1, n) == Rational(cayley_faces(n, k)));
}

TEST_CASE("B") {
  CHECK(S().B.coefficient(1, 3) == 1);
  CHECK(S().B.coefficient(3, 6) == 7);
  CHECK(S().B.coefficient(6, 8) == 14);
  CHECK(S().B.coefficient(6, 12) == 7098);
}

TEST_CASE("C") {
  CHECK(S().C.coefficient(2, 4) == 0);
  CHECK(S().C.coefficient(2, 5) == 1);
  for (int n = 0; n <= 16; ++n) {
    CHECK(S().C.coefficient(0, n) == 0);
    CHECK(S().C.coefficient(1, n) == 0);
  }
}

TEST_CASE("F") {
  CHECK(S().F.coefficient(4, 6) == 2);
  CHECK(S().F.coefficient(3, 6) == 3);
  CHECK(S().F.coefficient(7, 10) == 52);
  CHECK(S().F == compute_F(S().B, S().C));
}

TEST_CASE("feasible region") {
  for (int m = 0; m <= 14; ++m)
    for (int n = 0; n <= 16; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const bool a_feasible = (m == 0 && n == 1) || (1 <= m && m <= n - 1);
      const bool f_feasible = 1 <= m && m <= n - 2;
      CHECK((S().A.coefficient(m, n) != 0) == a_feasible);
      CHECK((S().F.coefficient(m, n) != 0) == f_feasible);
    }
}

TEST_CASE("B matches marked-cell orbits") {
  for (int sides = 3; sides <= 9; ++sides)
    for (int m = 1; m <= sides - 2; ++m) {
      CAPTURE(sides);
      CAPTURE(m);
      CHECK(S().B.coefficient(m, sides) == Rational(oracle::cell_rooted_count(sides, m)));
    }
}

TEST_CASE("F matches orbits of dissections") {
  for (int n = 3; n <= 9; ++n)
    for (int k = 0; k <= n - 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(S().F.coefficient(k + 1, n) == Rational(static_cast<long>(oracle::class_orbit_sizes(n, k).size())));
    }
}

TEST_CASE("A matches grown edge-rooted shapes") {
  const auto grown = grown_edge_rooted_counts(9);
  for (int n = 2; n <= 9; ++n)
    for (int m = 1; m <= n - 1; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      auto it = grown.find({m, n});
      CHECK(S().A.coefficient(m, n) == Rational(it == grown.end() ? Integer(0) : it->second));
    }
}

TEST_CASE("all series are counting series") {
  for (const auto* s : {&S().A, &S().V, &S().B, &S().C, &S().F}) {
    CHECK(s->is_integral());
    CHECK_FALSE(s->has_negative_coefficient());
  }
}

TEST_CASE("bounds are validated") {
  CHECK_THROWS_AS(compute_A({0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(compute_V({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(compute_F(S().B, compute_C(compute_A({4, 4}))), std::invalid_argument);
}
