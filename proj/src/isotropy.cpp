#include "polycells/isotropy.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

namespace polycells {

std::string IsotropyDescriptor::to_string() const {
  std::string s;
  if (z2_count > 0) s = z2_count == 1 ? "Z2" : "Z2^" + std::to_string(z2_count);
  if (dihedral_order) {
    if (!s.empty()) s += " x ";
    s += "D" + std::to_string(*dihedral_order);
  }
  return s.empty() ? "1" : s;
}

namespace {

bool palindromic(const std::vector<std::string>& codes) {
  for (std::size_t i = 0, j = codes.size(); i < j--; ++i)
    if (codes[i] != codes[j]) return false;
  return true;
}

}  // namespace

IsotropyDescriptor isotropy_group(const Dissection& rep) {
  const PlaneTree t = dual_tree(rep);
  IsotropyDescriptor g;
  g.center = tree_center(t);

  // Parent of every cell on the way to the center.
  std::vector<int> parent(t.internal_count, -1);
  std::queue<int> q;
  auto seed = [&](int v, int p) {
    parent[v] = p;
    q.push(v);
  };
  if (g.center.kind == CenterKind::cell) {
    seed(g.center.cell, -1);
  } else {
    seed(g.center.cell, g.center.other);
    seed(g.center.other, g.center.cell);
  }
  std::vector<bool> seen(t.internal_count, false);
  seen[g.center.cell] = true;
  if (g.center.kind == CenterKind::diagonal) seen[g.center.other] = true;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : t.nodes[u].nbrs)
      if (!t.is_leaf(w) && !seen[w]) {
        seen[w] = true;
        seed(w, u);
      }
  }

  // Local: a non-central cell is fixed as a whole by the mirror that keeps its
  // parent edge, provided the children read the same both ways.
  for (int v = 0; v < t.internal_count; ++v) {
    if (parent[v] < 0) continue;
    if (palindromic(child_codes(t, v, parent[v]))) ++g.z2_count;
  }

  int rotations = 1;
  if (g.center.kind == CenterKind::diagonal) {
    if (rooted_code(t, g.center.cell, g.center.other) == rooted_code(t, g.center.other, g.center.cell))
      ++g.z2_count;
  } else {
    const int c = g.center.cell;
    std::vector<std::string> codes;
    for (int w : t.nodes[c].nbrs) codes.push_back(rooted_code(t, w, c));
    const std::size_t d = codes.size();
    int rot = 0;
    bool mirror = false;
    for (std::size_t s = 0; s < d; ++s) {
      bool same = true, reversed = true;
      for (std::size_t i = 0; i < d; ++i) {
        same = same && codes[(i + s) % d] == codes[i];
        reversed = reversed && codes[(s + d - i) % d] == codes[i];
      }
      rot += same ? 1 : 0;
      mirror = mirror || reversed;
    }
    rotations = rot;
    if (rotations >= 2) {
      g.dihedral_order = rotations;
      g.rotation_promoted = !mirror;
    } else if (mirror) {
      ++g.z2_count;
    }
  }

  Integer order;
  mpz_ui_pow_ui(order.get_mpz_t(), 2, static_cast<unsigned long>(g.z2_count));
  if (g.dihedral_order) order *= 2 * *g.dihedral_order;
  g.order = order;
  return g;
}

Integer kappa_from_isotropy(int n, int k, const IsotropyDescriptor& g) {
  Integer num;
  mpz_ui_pow_ui(num.get_mpz_t(), 2, static_cast<unsigned long>(k + 1));
  num *= n;
  if (g.order <= 0 || num % g.order != 0)
    throw std::logic_error("isotropy order " + g.order.get_str() + " does not divide " + num.get_str());
  return num / g.order;
}

}  // namespace polycells
