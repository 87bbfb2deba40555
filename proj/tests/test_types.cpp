#include <doctest.h>

#include <map>
#include <random>

#include "generators.hpp"
#include "polycells/dissection.hpp"
#include "polycells/facecount.hpp"
#include "polycells/types.hpp"

using namespace polycells;

TEST_CASE("partition counts") {
  CHECK(partition_count(5, 2) == 2);
  CHECK(partition_count(9, 3) == 7);
  CHECK_THROWS_AS(partition_count(0, 0), std::invalid_argument);
  CHECK(partition_count(4, 5) == 0);
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(partition_count(n, k) == Integer(static_cast<long>(partitions_into_parts(n, k).size())));
}

TEST_CASE("partition listing order") {
  const auto parts = partitions_into_parts(6, 3);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::vector<int>{4, 1, 1});
  CHECK(parts[1] == std::vector<int>{3, 2, 1});
  CHECK(parts[2] == std::vector<int>{2, 2, 2});
}

TEST_CASE("signatures of K_6 facets") {
  const auto sigs = type_signatures(6, 1);
  REQUIRE(sigs.size() == 2);
  CHECK(sigs[0].to_string() == "<3:6>");
  CHECK(sigs[0].factorization_string() == "K5 x K2");
  CHECK(sigs[1].to_string() == "<4:5>");
  CHECK(sigs[1].factorization_string() == "K4 x K3");
  CHECK(type_face_count(sigs[0]) + type_face_count(sigs[1]) == cayley_faces(6, 1));
}

TEST_CASE("type face counts") {
  const auto sig = TypeSignature::parse("<3^2:4>");
  CHECK(sig.host_n() == 5);
  CHECK(sig.codim() == 2);
  CHECK(sig.polygon_sides() == 6);
  CHECK(type_face_count(sig) == 21);
  CHECK(type_face_count(TypeSignature::parse("<3^3:5>")) == 120);
  CHECK(type_face_count(TypeSignature::parse("<3^2:4:6>")) == 660);
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"<3>", "<3^2:4:6>", "<5^3>", "<3:4:5:6:7>"})
    CHECK(TypeSignature::parse(text).to_string() == text);
  CHECK(TypeSignature::parse(" < 4 : 3 ^ 2 > ").to_string() == "<3^2:4>");
}

TEST_CASE("parse errors") {
  for (const char* bad : {"", "<>", "3:4", "<2>", "<3^0>", "<3^>", "<a>", "<3:4", "<3::4>", "<3^2^2>"})
    CHECK_THROWS_AS(TypeSignature::parse(bad), std::invalid_argument);
}

TEST_CASE("type counts sum to face counts") {
  for (int n = 2; n <= 14; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      Integer total = 0;
      for (const auto& sig : type_signatures(n, k)) {
        CHECK(sig.host_n() == n);
        CHECK(sig.codim() == k);
        total += type_face_count(sig);
      }
      CHECK(total == cayley_faces(n, k));
    }
}

TEST_CASE("type counts match enumeration") {
  for (int sides = 3; sides <= 10; ++sides)
    for (int k = 0; k <= sides - 3; ++k) {
      std::map<TypeSignature, Integer> seen;
      for (const auto& D : enumerate_dissections(sides, k)) seen[signature(D)] += 1;
      const auto sigs = type_signatures(sides - 1, k);
      CHECK(seen.size() == sigs.size());
      for (const auto& sig : sigs) {
        CAPTURE(sig.to_string());
        CHECK(seen[sig] == type_face_count(sig));
      }
    }
}

TEST_CASE("twisting keeps the type") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto D = oracle::random_dissection(rng, 4, 12, 1);
    for (const auto& d : D.diagonals()) CHECK(signature(twist(D, d)) == signature(D));
  }
}
