#include "polycells/census.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "polycells/plane_tree.hpp"

namespace polycells {

LabeledDissection rotate(const LabeledDissection& L, int steps) {
  const int n = L.shape.n();
  const int s = ((steps % n) + n) % n;
  std::vector<int> labels(n);
  for (int side = 0; side < n; ++side) labels[(side + s) % n] = L.side_labels[side];
  return {rotate(L.shape, s), std::move(labels)};
}

LabeledDissection reflect(const LabeledDissection& L) {
  const int n = L.shape.n();
  std::vector<int> labels(n);
  // v -> -v sends side (s, s+1) to side (-s-1, -s).
  for (int side = 0; side < n; ++side) labels[(2 * n - side - 1) % n] = L.side_labels[side];
  return {reflect(L.shape), std::move(labels)};
}

LabeledDissection twist(const LabeledDissection& L, Diagonal d) {
  d = make_diagonal(d.a, d.b);
  auto shape = twist(L.shape, d);
  std::vector<int> labels = L.side_labels;
  for (int side = d.a; side < d.b; ++side) labels[d.a + d.b - 1 - side] = L.side_labels[side];
  return {std::move(shape), std::move(labels)};
}

LabeledDissection relabel(const LabeledDissection& L, const std::vector<int>& perm) {
  std::vector<int> labels(L.side_labels.size());
  for (std::size_t s = 0; s < labels.size(); ++s) labels[s] = perm[L.side_labels[s]];
  return {L.shape, std::move(labels)};
}

namespace {

// Packs labels (3 bits each) and the diagonal set (one bit per vertex pair).
std::uint64_t pack(const LabeledDissection& L) {
  const int n = L.shape.n();
  std::uint64_t key = 0;
  for (int s = 0; s < n; ++s) key |= static_cast<std::uint64_t>(L.side_labels[s]) << (3 * s);
  int offset = 3 * n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (L.shape.contains({a, b})) key |= std::uint64_t{1} << offset;
      ++offset;
    }
  return key;
}

}  // namespace

Integer labeled_moduli_census(int n, int k) {
  if (n > kMaxCensusPolygon)
    throw std::domain_error("labeled census refused for a " + std::to_string(n) +
                            "-gon: at most " + std::to_string(kMaxCensusPolygon) +
                            " sides (the state space grows as n! times the face count)");
  const auto shapes = enumerate_dissections(n, k);
  std::unordered_set<std::uint64_t> visited;
  Integer orbits = 0;
  std::vector<int> perm(n);
  for (const auto& D : shapes) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      LabeledDissection start{D, perm};
      if (!visited.insert(pack(start)).second) continue;
      orbits += 1;
      std::queue<LabeledDissection> q;
      q.push(std::move(start));
      while (!q.empty()) {
        auto cur = std::move(q.front());
        q.pop();
        std::vector<LabeledDissection> next;
        next.push_back(rotate(cur, 1));
        next.push_back(reflect(cur));
        for (const auto& d : cur.shape.diagonals()) next.push_back(twist(cur, d));
        for (auto& nb : next)
          if (visited.insert(pack(nb)).second) q.push(std::move(nb));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return orbits;
}

namespace {

std::string labeled_code(const PlaneTree& t, const std::vector<int>& labels, int v, int parent) {
  if (t.is_leaf(v)) return "[" + std::to_string(labels[t.nodes[v].side]) + "]";
  std::vector<std::string> codes;
  for (int c : t.children(v, parent)) codes.push_back(labeled_code(t, labels, c, v));
  std::string fwd, rev;
  for (const auto& c : codes) fwd += c;
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) rev += *it;
  return "(" + std::min(fwd, rev) + ")";
}

}  // namespace

std::string labeled_face_key(const LabeledDissection& L) {
  const auto t = dual_tree(L.shape);
  const auto it = std::find(L.side_labels.begin(), L.side_labels.end(), 0);
  if (it == L.side_labels.end()) throw std::invalid_argument("labels must include 0");
  const int leaf = t.internal_count + static_cast<int>(it - L.side_labels.begin());
  const int cell = t.nodes[leaf].nbrs.front();
  return labeled_code(t, L.side_labels, cell, leaf);
}

}  // namespace polycells
