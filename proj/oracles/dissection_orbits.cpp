#include "dissection_orbits.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <map>
#include <numeric>
#include <queue>
#include <utility>

namespace polycells::oracle {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::size_t> class_orbit_sizes(int n, int k) {
  const auto all = enumerate_dissections(n, k);
  std::map<Dissection, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  UnionFind uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    uf.unite(i, index.at(rotate(all[i], 1)));
    uf.unite(i, index.at(reflect(all[i])));
    for (const auto& d : all[i].diagonals()) uf.unite(i, index.at(twist(all[i], d)));
  }
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < all.size(); ++i) ++sizes[uf.find(i)];
  std::vector<std::size_t> out;
  for (const auto& [root, s] : sizes) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

Integer cell_rooted_count(int sides, int cells) {
  const int n = sides;
  if (n > 16 || cells - 1 > 8) throw std::invalid_argument("cell_rooted_count: polygon too large");
  const auto all = enumerate_dissections(n, cells - 1);
  auto key = [](const Dissection& D) {
    std::uint64_t k = 0;
    for (const auto& d : D.diagonals()) k = (k << 8) | static_cast<std::uint64_t>(d.a << 4 | d.b);
    return k;
  };
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(key(all[i]), i);

  // State: (dissection, marked cell as a vertex bitmask).
  std::vector<std::pair<std::size_t, unsigned>> states;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& cell : polycells::cells(all[i])) {
      unsigned mask = 0;
      for (int v : cell) mask |= 1u << v;
      states.emplace_back(i, mask);
    }
  std::sort(states.begin(), states.end());
  auto state_index = [&](std::size_t d, unsigned mask) {
    auto it = std::lower_bound(states.begin(), states.end(), std::make_pair(d, mask));
    if (it == states.end() || *it != std::make_pair(d, mask))
      throw std::logic_error("cell_rooted_count: move left the state space");
    return static_cast<std::size_t>(it - states.begin());
  };
  auto map_mask = [](unsigned mask, auto&& f) {
    unsigned out = 0;
    for (int v = 0; v < 32; ++v)
      if (mask >> v & 1u) out |= 1u << f(v);
    return out;
  };

  UnionFind uf(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto [i, mask] = states[s];
    const auto& D = all[i];
    uf.unite(s, state_index(index.at(key(rotate(D, 1))), map_mask(mask, [&](int v) { return (v + 1) % n; })));
    uf.unite(s, state_index(index.at(key(reflect(D))), map_mask(mask, [&](int v) { return (n - v) % n; })));
    for (const auto& d : D.diagonals()) {
      // Only the piece on vertices a..b moves; a cell lies on one side of d.
      const unsigned piece = ((2u << d.b) - 1) & ~((1u << d.a) - 1);
      const bool inside = (mask & ~piece) == 0;
      const unsigned moved = inside ? map_mask(mask, [&](int v) { return d.a + d.b - v; }) : mask;
      uf.unite(s, state_index(index.at(key(twist(D, d))), moved));
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t s = 0; s < states.size(); ++s) roots.insert(uf.find(s));
  return Integer(static_cast<unsigned long>(roots.size()));
}

std::set<LabeledDissection> face_orbit(const LabeledDissection& L) {
  std::set<LabeledDissection> seen{L};
  std::queue<LabeledDissection> q;
  q.push(L);
  while (!q.empty()) {
    const auto cur = q.front();
    q.pop();
    std::vector<LabeledDissection> nbrs{rotate(cur, 1), reflect(cur)};
    for (const auto& d : cur.shape.diagonals()) nbrs.push_back(twist(cur, d));
    for (auto& nb : nbrs)
      if (seen.insert(nb).second) q.push(std::move(nb));
  }
  return seen;
}

Integer stabilizer_order(const LabeledDissection& L) {
  const auto orbit = face_orbit(L);
  std::vector<int> perm(L.side_labels.size());
  std::iota(perm.begin(), perm.end(), 0);
  Integer count = 0;
  do {
    if (orbit.count(relabel(L, perm))) count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace polycells::oracle
