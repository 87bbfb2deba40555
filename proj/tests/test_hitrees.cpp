#include <doctest.h>

#include <map>

#include "free_trees.hpp"
#include "labeled_trees.hpp"
#include "polycells/clusters.hpp"
#include "polycells/dissection.hpp"
#include "polycells/hitrees.hpp"
#include "polycells/plane_tree.hpp"

using namespace polycells;

namespace {

DegreePartition dp(int m, int m1, std::map<int, int> mi) { return {m, m1, std::move(mi)}; }

Integer lookup(const std::map<DegreePartition, Integer>& counts, const DegreePartition& key) {
  auto it = counts.find(key);
  return it == counts.end() ? Integer(0) : it->second;
}

}  // namespace

TEST_CASE("degree partition") {
  const auto p = dp(12, 9, {{4, 2}, {5, 1}});
  CHECK(p.valid());
  CHECK(p.to_string() == "12: t1^9 t4^2 t5^1");
  CHECK_FALSE(dp(3, 2, {}).valid());
}

TEST_CASE("small HI trees") {
  const auto counts = degree_partition_counts(hi_tree_series(8));
  CHECK(lookup(counts, dp(2, 2, {})) == 1);
  CHECK(lookup(counts, dp(4, 3, {{3, 1}})) == 1);
  CHECK(lookup(counts, dp(6, 4, {{3, 2}})) == 1);
  for (const auto& [key, count] : counts) {
    CHECK(key.m != 3);
    CHECK(key.valid());
    CHECK(count > 0);
  }
}

TEST_CASE("HI trees match the free tree census") {
  const auto series = degree_partition_counts(hi_tree_series(10));
  CHECK(series == oracle::hi_tree_census(10));
}

TEST_CASE("trees dual to faces") {
  const auto faces8 = trees_for_face_census(8, 2);
  CHECK(lookup(faces8, dp(12, 9, {{4, 2}, {5, 1}})) == 2);
  const auto vertices = trees_for_face_census(5, 0);
  REQUIRE(vertices.size() == 1);
  CHECK(vertices.begin()->first == dp(7, 6, {{6, 1}}));
  CHECK(vertices.begin()->second == 1);
  CHECK(lookup(trees_for_face_census(5, 3), dp(10, 6, {{3, 4}})) == 2);
}

TEST_CASE("face census matches dual trees of dissections") {
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; k <= n - 2 && n + k + 2 <= 15; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      std::map<std::string, DegreePartition> free_shapes;
      for (const auto& D : enumerate_dissections(n + 1, k)) {
        const auto t = dual_tree(D);
        oracle::Adjacency adj(t.nodes.size());
        DegreePartition key{static_cast<int>(t.nodes.size()), 0, {}};
        for (std::size_t v = 0; v < t.nodes.size(); ++v) {
          adj[v] = t.nodes[v].nbrs;
          if (t.nodes[v].nbrs.size() == 1)
            ++key.m1;
          else
            ++key.mi[static_cast<int>(t.nodes[v].nbrs.size())];
        }
        free_shapes.emplace(oracle::canonical_tree_string(adj), key);
      }
      std::map<DegreePartition, Integer> brute;
      for (const auto& [code, key] : free_shapes) brute[key] += 1;
      CHECK(trees_for_face_census(n, k) == brute);
    }
}

TEST_CASE("phylogenies") {
  const long expected[] = {1, 1, 4, 26, 236, 2752};
  for (int n = 2; n <= 7; ++n) CHECK(phylo_count(n) == expected[n - 2]);
  CHECK(rooted_phylo_count(3) == 4);
  for (int n = 2; n <= 7; ++n) CHECK(phylo_count(n) == Integer(static_cast<unsigned long>(oracle::count_leaf_labeled_trees(n).all)));
}

TEST_CASE("commutative bracketings") {
  CHECK(wedderburn(4) == 2);
  CHECK(wedderburn(5) == 3);
  CHECK(wedderburn(6) == 6);
  CHECK(wedderburn(7) == 11);
  const auto A = compute_A({8, 8});
  CHECK(wedderburn(8, A) == 23);
  CHECK_THROWS_AS(wedderburn(9, A), std::out_of_range);
  CHECK(brackets_on_commuting(0, 4, A) == 1);
  CHECK(brackets_on_commuting(2, 4, A) == 2);
}

TEST_CASE("errors") {
  CHECK_THROWS(hi_tree_series(1));
  CHECK_THROWS(hi_tree_series(16));
  CHECK_THROWS(trees_for_face_census(14, 2));
  CHECK_THROWS(trees_for_face_census(5, 4));
}
