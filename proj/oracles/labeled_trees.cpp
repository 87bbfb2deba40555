#include "labeled_trees.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polycells::oracle {

bool LeafLabeledTree::binary() const {
  for (std::size_t v = leaves; v < adj.size(); ++v)
    if (adj[v].size() != 3) return false;
  return true;
}

namespace {

std::string code(const LeafLabeledTree& t, int v, int parent) {
  if (v < t.leaves && parent != -1) return std::to_string(v);
  std::vector<std::string> kids;
  for (int w : t.adj[v])
    if (w != parent) kids.push_back(code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k + ",";
  return s + ")";
}

// Renumbers so that leaves stay 0..leaves-1 after a new leaf is appended.
LeafLabeledTree with_new_leaf(const LeafLabeledTree& t) {
  LeafLabeledTree out;
  out.leaves = t.leaves + 1;
  auto map = [&](int v) { return v < t.leaves ? v : v + 1; };
  out.adj.resize(t.adj.size() + 1);
  for (std::size_t v = 0; v < t.adj.size(); ++v)
    for (int w : t.adj[v]) out.adj[map(static_cast<int>(v))].push_back(map(w));
  return out;
}

void unlink(std::vector<int>& nbrs, int w) { nbrs.erase(std::find(nbrs.begin(), nbrs.end(), w)); }

}  // namespace

std::string LeafLabeledTree::canonical() const { return code(*this, 0, -1); }

std::vector<LeafLabeledTree> leaf_labeled_trees(int n) {
  if (n < 2) throw std::invalid_argument("leaf_labeled_trees needs n >= 2");
  LeafLabeledTree edge;
  edge.leaves = 2;
  edge.adj = {{1}, {0}};
  std::vector<LeafLabeledTree> level{edge};
  for (int size = 3; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<LeafLabeledTree> next;
    auto keep = [&](LeafLabeledTree&& t) {
      if (seen.insert(t.canonical()).second) next.push_back(std::move(t));
    };
    for (const auto& t : level) {
      const auto base = with_new_leaf(t);
      const int leaf = size - 1;
      const int vertices = static_cast<int>(base.adj.size());
      for (int v = base.leaves; v < vertices; ++v) {
        auto g = base;
        g.adj[v].push_back(leaf);
        g.adj[leaf].push_back(v);
        keep(std::move(g));
      }
      for (int u = 0; u < vertices; ++u) {
        for (int w : base.adj[u]) {
          if (w < u) continue;
          auto g = base;
          const int mid = static_cast<int>(g.adj.size());
          g.adj.emplace_back();
          unlink(g.adj[u], w);
          unlink(g.adj[w], u);
          g.adj[u].push_back(mid);
          g.adj[w].push_back(mid);
          g.adj[leaf].push_back(mid);
          g.adj[mid] = {u, w, leaf};
          keep(std::move(g));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

LeafLabeledCounts count_leaf_labeled_trees(int n) {
  LeafLabeledCounts c;
  if (n == 1) {
    c.all = 1;
    return c;
  }
  for (const auto& t : leaf_labeled_trees(n)) {
    ++c.all;
    if (t.binary()) ++c.binary;
  }
  return c;
}

namespace {

const std::set<std::string>& rooted_binary(unsigned mask, std::map<unsigned, std::set<std::string>>& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::set<std::string> out;
  if ((mask & (mask - 1)) == 0) {
    int leaf = 0;
    while (!(mask >> leaf & 1u)) ++leaf;
    out.insert(std::to_string(leaf));
  } else {
    for (unsigned left = (mask - 1) & mask; left; left = (left - 1) & mask) {
      const unsigned right = mask & ~left;
      for (const auto& a : rooted_binary(left, memo))
        for (const auto& b : rooted_binary(right, memo))
          out.insert("(" + std::min(a, b) + "," + std::max(a, b) + ")");
    }
  }
  return memo.emplace(mask, std::move(out)).first->second;
}

}  // namespace

std::uint64_t count_rooted_binary_trees(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("count_rooted_binary_trees needs 1 <= n <= 12");
  std::map<unsigned, std::set<std::string>> memo;
  return rooted_binary((1u << n) - 1, memo).size();
}

}  // namespace polycells::oracle
