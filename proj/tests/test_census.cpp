#include <doctest.h>

#include "polycells/census.hpp"
#include "polycells/facecount.hpp"

using namespace polycells;

TEST_CASE("labeled census anchors") {
  CHECK(labeled_moduli_census(5, 0) == 12);
  CHECK(labeled_moduli_census(4, 0) == 3);
  CHECK(labeled_moduli_census(5, 2) == 15);
}

TEST_CASE("labeled census matches the face formula") {
  for (int sides = 3; sides <= 6; ++sides)
    for (int k = 0; k <= sides - 3; ++k) {
      CAPTURE(sides);
      CAPTURE(k);
      CHECK(labeled_moduli_census(sides, k) == moduli_faces(sides - 1, k));
    }
}

TEST_CASE("census refuses large polygons") {
  CHECK_THROWS_AS(labeled_moduli_census(kMaxCensusPolygon + 1, 0), std::domain_error);
}

TEST_CASE("labeled moves") {
  const LabeledDissection L{Dissection(5, {make_diagonal(0, 2)}), {0, 1, 2, 3, 4}};
  CHECK(rotate(rotate(L, 2), 3) == L);
  CHECK(reflect(reflect(L)) == L);
  CHECK(twist(twist(L, {0, 2}), {0, 2}) == L);
  CHECK(relabel(L, {1, 2, 3, 4, 0}).side_labels == std::vector<int>{1, 2, 3, 4, 0});
  CHECK(labeled_face_key(rotate(L, 1)) == labeled_face_key(L));
  CHECK(labeled_face_key(reflect(L)) == labeled_face_key(L));
  CHECK(labeled_face_key(twist(L, {0, 2})) == labeled_face_key(L));
  CHECK(labeled_face_key(relabel(L, {2, 1, 0, 3, 4})) != labeled_face_key(L));
}
