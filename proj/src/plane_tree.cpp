#include "polycells/plane_tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace polycells {

std::vector<int> PlaneTree::children(int v, int parent) const {
  const auto& nb = nodes[v].nbrs;
  const auto it = std::find(nb.begin(), nb.end(), parent);
  if (it == nb.end()) throw std::logic_error("children: parent is not adjacent");
  std::vector<int> out;
  const auto d = nb.size();
  const auto p = static_cast<std::size_t>(it - nb.begin());
  for (std::size_t i = 1; i < d; ++i) out.push_back(nb[(p + i) % d]);
  return out;
}

bool PlaneTree::adjacent(int u, int v) const {
  const auto& nb = nodes[u].nbrs;
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

PlaneTree dual_tree(const Dissection& D) {
  const int n = D.n();
  const auto cs = cells(D);
  PlaneTree t;
  t.polygon_sides = n;
  t.internal_count = static_cast<int>(cs.size());
  t.nodes.resize(cs.size() + n);

  std::map<Diagonal, std::vector<int>> owners;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto& vs = cs[c];
    for (std::size_t j = 0; j < vs.size(); ++j)
      owners[make_diagonal(vs[j], vs[(j + 1) % vs.size()])].push_back(static_cast<int>(c));
  }
  for (int s = 0; s < n; ++s) {
    auto& leaf = t.nodes[t.internal_count + s];
    leaf.side = s;
  }
  for (std::size_t c = 0; c < cs.size(); ++c) {
    auto& node = t.nodes[c];
    node.cell_vertices = cs[c];
    node.cell_size = static_cast<int>(cs[c].size());
    const auto& vs = cs[c];
    for (std::size_t j = 0; j < vs.size(); ++j) {
      const Diagonal e = make_diagonal(vs[j], vs[(j + 1) % vs.size()]);
      if (is_side(n, e)) {
        const int side = (e.a == 0 && e.b == n - 1) ? n - 1 : e.a;
        const int leaf = t.internal_count + side;
        node.nbrs.push_back(leaf);
        t.nodes[leaf].nbrs = {static_cast<int>(c)};
      } else {
        const auto& own = owners.at(e);
        if (own.size() != 2) throw std::logic_error("a diagonal must border exactly two cells");
        node.nbrs.push_back(own[0] == static_cast<int>(c) ? own[1] : own[0]);
      }
    }
  }
  return t;
}

namespace {

std::vector<int> internal_eccentricities(const PlaneTree& t) {
  const int m = t.internal_count;
  std::vector<int> ecc(m, 0);
  for (int s = 0; s < m; ++s) {
    std::vector<int> dist(m, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      ecc[s] = std::max(ecc[s], dist[u]);
      for (int w : t.nodes[u].nbrs)
        if (!t.is_leaf(w) && dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
  }
  return ecc;
}

}  // namespace

Center tree_center(const PlaneTree& t) {
  if (t.internal_count < 1) throw std::invalid_argument("tree_center needs at least one cell");
  const auto ecc = internal_eccentricities(t);
  const int best = *std::min_element(ecc.begin(), ecc.end());
  std::vector<int> mins;
  for (int v = 0; v < t.internal_count; ++v)
    if (ecc[v] == best) mins.push_back(v);
  if (mins.size() == 1) return {CenterKind::cell, mins[0]};
  if (mins.size() == 2 && t.adjacent(mins[0], mins[1]))
    return {CenterKind::diagonal, mins[0], mins[1]};
  throw std::logic_error("tree center is neither a vertex nor an edge");
}

std::vector<std::string> child_codes(const PlaneTree& t, int v, int parent) {
  std::vector<std::string> out;
  for (int c : t.children(v, parent)) out.push_back(rooted_code(t, c, v));
  return out;
}

std::string rooted_code(const PlaneTree& t, int v, int parent) {
  if (t.is_leaf(v)) return "L";
  auto codes = child_codes(t, v, parent);
  std::string fwd, rev;
  for (const auto& c : codes) fwd += c;
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) rev += *it;
  return std::to_string(t.nodes[v].cell_size) + "(" + std::min(fwd, rev) + ")";
}

}  // namespace polycells
