#include <doctest.h>

#include "polycells/facecount.hpp"

using namespace polycells;

TEST_CASE("cayley_faces") {
  CHECK(cayley_faces(6, 1) == 14);
  CHECK(cayley_faces(5, 3) == 14);
  for (int n = 2; n <= 12; ++n) CHECK(cayley_faces(n, 0) == 1);
  CHECK_THROWS_AS(cayley_faces(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(cayley_faces(5, -1), std::invalid_argument);
  CHECK_THROWS_AS(cayley_faces(1, 0), std::invalid_argument);
}

TEST_CASE("catalan") {
  CHECK(catalan(2) == 1);
  CHECK(catalan(5) == 14);
  CHECK(catalan(6) == 42);
  for (int n = 2; n <= 14; ++n) CHECK(catalan(n) == cayley_faces(n, n - 2));
  CHECK_THROWS_AS(catalan(1), std::invalid_argument);
}

TEST_CASE("schroder") {
  CHECK(schroder(2) == 1);
  CHECK(schroder(4) == 11);
  CHECK(schroder(5) == 45);
  for (int n = 2; n <= 14; ++n) {
    Integer total = 0;
    for (int k = 0; k <= n - 2; ++k) total += cayley_faces(n, k);
    CHECK(schroder(n) == total);
  }
  CHECK_THROWS_AS(schroder(1), std::invalid_argument);
}

TEST_CASE("moduli_faces") {
  CHECK(moduli_faces(4, 0) == 12);
  CHECK(moduli_faces(4, 2) == 15);
  CHECK(moduli_faces(3, 0) == 3);
  CHECK_THROWS_AS(moduli_faces(4, 3), std::invalid_argument);
}

TEST_CASE("binary coupling vertices") {
  CHECK(binary_coupling_vertices(2) == 1);
  CHECK(binary_coupling_vertices(4) == 15);
  CHECK(binary_coupling_vertices(6) == 945);
  CHECK(moduli_faces(6, 4) == 945);
  for (int n = 2; n <= 10; ++n) {
    Integer odd = 1;
    for (int j = 3; j <= 2 * n - 3; j += 2) odd *= j;
    CHECK(binary_coupling_vertices(n) == odd);
    CHECK(moduli_faces(n, n - 2) == odd);
  }
  CHECK_THROWS_AS(binary_coupling_vertices(1), std::invalid_argument);
}
