#include <doctest.h>

#include "necklaces.hpp"
#include "polycells/clusters.hpp"
#include "polycells/polya.hpp"

using namespace polycells;

TEST_CASE("root-edge cycle index") {
  const auto z2 = root_edge_cycle_index(2);
  CHECK(z2.coefficient({{1, 2}}) == ratio(1, 2));
  CHECK(z2.coefficient({{2, 1}}) == ratio(1, 2));
  CHECK(z2.terms().size() == 2);

  const auto z3 = root_edge_cycle_index(3);
  CHECK(z3.coefficient({{1, 3}}) == ratio(1, 2));
  CHECK(z3.coefficient({{1, 1}, {2, 1}}) == ratio(1, 2));

  const auto z4 = root_edge_cycle_index(4);
  CHECK(z4.coefficient({{1, 4}}) == ratio(1, 2));
  CHECK(z4.coefficient({{2, 2}}) == ratio(1, 2));

  CHECK_THROWS_AS(root_edge_cycle_index(1), std::invalid_argument);
}

TEST_CASE("dihedral cycle index") {
  const auto d3 = dihedral_cycle_index(3);
  CHECK(d3.coefficient({{1, 3}}) == ratio(1, 6));
  CHECK(d3.coefficient({{3, 1}}) == ratio(1, 3));
  CHECK(d3.coefficient({{1, 1}, {2, 1}}) == ratio(1, 2));
  CHECK(d3.terms().size() == 3);

  // (1/8)(s1^4 + s2^2 + 2 s4) + (1/4)(s1^2 s2 + s2^2)
  const auto d4 = dihedral_cycle_index(4);
  CHECK(d4.coefficient({{1, 4}}) == ratio(1, 8));
  CHECK(d4.coefficient({{2, 2}}) == ratio(3, 8));
  CHECK(d4.coefficient({{4, 1}}) == ratio(1, 4));
  CHECK(d4.coefficient({{1, 2}, {2, 1}}) == ratio(1, 4));
  CHECK(d4.terms().size() == 4);

  for (int k = 3; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(dihedral_cycle_index(k).coefficient_sum() == 1);
    const auto z = dihedral_cycle_index(k);
    for (const auto& [type, c] : z.terms()) CHECK(c > 0);
  }
  CHECK_THROWS_AS(dihedral_cycle_index(2), std::invalid_argument);
}

TEST_CASE("dihedral index counts bracelets") {
  for (int k = 3; k <= 6; ++k)
    for (int q = 1; q <= 3; ++q) {
      CAPTURE(k);
      CAPTURE(q);
      CHECK(dihedral_cycle_index(k).evaluate_uniform(q) == Rational(oracle::bracelet_count(k, q)));
    }
}

TEST_CASE("symmetric cycle index") {
  const auto z0 = symmetric_cycle_index(0);
  CHECK(z0.coefficient({}) == 1);
  CHECK(z0.terms().size() == 1);

  const auto z2 = symmetric_cycle_index(2);
  CHECK(z2.coefficient({{1, 2}}) == ratio(1, 2));
  CHECK(z2.coefficient({{2, 1}}) == ratio(1, 2));

  const auto z3 = symmetric_cycle_index(3);
  CHECK(z3.coefficient({{1, 3}}) == ratio(1, 6));
  CHECK(z3.coefficient({{1, 1}, {2, 1}}) == ratio(1, 2));
  CHECK(z3.coefficient({{3, 1}}) == ratio(1, 3));

  for (int n = 0; n <= 8; ++n) CHECK(symmetric_cycle_index(n).coefficient_sum() == 1);
  CHECK_THROWS_AS(symmetric_cycle_index(-1), std::invalid_argument);
}

TEST_CASE("cycle types must permute every site") {
  CycleIndex z(4);
  CHECK_THROWS_AS(z.add_term({{1, 3}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(z.add_term({{0, 4}}, 1), std::invalid_argument);
  z.add_term({{2, 1}, {1, 2}}, ratio(1, 2));
  CHECK(z.coefficient({{1, 2}, {2, 1}}) == ratio(1, 2));
}

TEST_CASE("plethysm") {
  const SeriesBounds bounds{4, 6};
  const auto S = BivariateSeries::monomial(bounds, 1, 2, 3) + BivariateSeries::y(bounds);
  CycleIndex identity(1);
  identity.add_term({{1, 1}}, 1);
  CHECK(plethysm(identity, S) == S);

  CHECK(plethysm(symmetric_cycle_index(2), BivariateSeries::y(bounds)) ==
        BivariateSeries::monomial(bounds, 0, 2, 1));

  const auto A = compute_A({6, 8});
  const auto xD3 = mul(BivariateSeries::x(A.bounds()), plethysm(dihedral_cycle_index(3), A));
  CHECK(xD3.coefficient(2, 4) == 1);
  CHECK(xD3.coefficient(1, 3) == 1);
}

TEST_CASE("plethysm of a counting series stays nonnegative") {
  const auto A = compute_A({6, 8});
  for (int k = 3; k <= 8; ++k) {
    const auto p = plethysm(dihedral_cycle_index(k), A);
    CHECK(p.is_integral());
    CHECK_FALSE(p.has_negative_coefficient());
  }
  for (int k = 2; k <= 6; ++k) CHECK_FALSE(plethysm(root_edge_cycle_index(k), A).has_negative_coefficient());
}
