#include "free_trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polycells::oracle {

namespace {

std::string rooted(const Adjacency& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t[v])
    if (w != parent) kids.push_back(rooted(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::vector<int> centers(const Adjacency& t) {
  const int n = static_cast<int>(t.size());
  if (n <= 2) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  // Peel leaves until one or two vertices remain.
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(t[v].size());
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : t[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string canonical_tree_string(const Adjacency& tree) {
  std::string best;
  for (int c : centers(tree)) {
    auto s = rooted(tree, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

namespace {

// Trees on one more vertex, each isomorphism class once.
std::vector<Adjacency> grow(const std::vector<Adjacency>& level) {
  std::set<std::string> seen;
  std::vector<Adjacency> next;
  for (const auto& t : level) {
    const int size = static_cast<int>(t.size()) + 1;
    for (int v = 0; v < size - 1; ++v) {
      Adjacency g = t;
      g.emplace_back();
      g[v].push_back(size - 1);
      g[size - 1].push_back(v);
      if (seen.insert(canonical_tree_string(g)).second) next.push_back(std::move(g));
    }
  }
  return next;
}

}  // namespace

std::vector<Adjacency> free_trees(int m) {
  if (m < 1) throw std::invalid_argument("free_trees needs m >= 1");
  std::vector<Adjacency> level{Adjacency(1)};
  for (int size = 2; size <= m; ++size) {
    level = grow(level);
  }
  return level;
}

std::map<DegreePartition, Integer> hi_tree_census(int max_vertices) {
  std::map<DegreePartition, Integer> out;
  std::vector<Adjacency> level{Adjacency(1)};
  for (int size = 2; size <= max_vertices; ++size) {
    level = grow(level);
    for (const auto& t : level) {
      DegreePartition p;
      p.m = size;
      bool irreducible = true;
      for (const auto& nbrs : t) {
        const int d = static_cast<int>(nbrs.size());
        if (d == 2) irreducible = false;
        if (d == 1)
          ++p.m1;
        else
          ++p.mi[d];
      }
      if (irreducible) out[p] += 1;
    }
  }
  return out;
}

}  // namespace polycells::oracle
