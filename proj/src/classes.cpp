#include "polycells/classes.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace polycells {

namespace {

std::string least_dihedral_reading(const std::vector<std::string>& codes) {
  const std::size_t d = codes.size();
  std::string best;
  bool have = false;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < d; ++start) {
      std::string s;
      for (std::size_t i = 0; i < d; ++i) {
        const std::size_t j = dir == 0 ? (start + i) % d : (start + d - i) % d;
        s += codes[j];
      }
      if (!have || s < best) {
        best = std::move(s);
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

ClassCode class_code(const PlaneTree& t) {
  const Center c = tree_center(t);
  if (c.kind == CenterKind::cell) {
    std::vector<std::string> codes;
    for (int w : t.nodes[c.cell].nbrs) codes.push_back(rooted_code(t, w, c.cell));
    return ClassCode("V" + std::to_string(t.nodes[c.cell].cell_size) + "(" +
                     least_dihedral_reading(codes) + ")");
  }
  const auto a = rooted_code(t, c.cell, c.other);
  const auto b = rooted_code(t, c.other, c.cell);
  return ClassCode("E(" + std::min(a, b) + std::max(a, b) + ")");
}

ClassCode class_code(const Dissection& D) { return class_code(dual_tree(D)); }

std::string ClassRecord::label() const {
  return std::to_string(n) + "." + std::to_string(k) + "." + std::to_string(index);
}

std::vector<ClassRecord> enumerate_classes(int n, int k) {
  if (n > kMaxClassPolygon)
    throw std::domain_error("class enumeration visits every dissection and is limited to polygons with at most " +
                            std::to_string(kMaxClassPolygon) + " sides");
  std::map<ClassCode, ClassRecord> buckets;
  for (auto& D : enumerate_dissections(n, k)) {
    auto code = class_code(D);
    auto it = buckets.find(code);
    if (it == buckets.end()) {
      ClassRecord r;
      r.code = code;
      r.n = n;
      r.k = k;
      r.kappa = 1;
      r.signature = signature(D);
      r.representative = std::move(D);
      buckets.emplace(std::move(code), std::move(r));
    } else {
      it->second.kappa += 1;
    }
  }
  std::vector<ClassRecord> out;
  int index = 0;
  for (auto& [code, r] : buckets) {
    r.index = ++index;
    out.push_back(std::move(r));
  }
  return out;
}

// --- growth by height -------------------------------------------------------

namespace {

struct Shape {
  int leaves = 1;
  int cells = 0;
  int height = 0;
  std::vector<int> kids;  // empty for the bare edge
  std::string code = "L";
};

class ShapeGrower {
 public:
  ShapeGrower(int max_leaves, int max_cells) : max_leaves_(max_leaves), max_cells_(max_cells) {
    shapes_.push_back(Shape{});
    seen_.insert("L");
    for (int h = 1;; ++h) {
      const auto before = shapes_.size();
      grow(h);
      if (shapes_.size() == before) break;
    }
  }

  const std::vector<Shape>& shapes() const { return shapes_; }

 private:
  void grow(int h) {
    std::vector<int> pool;
    for (int i = 0; i < static_cast<int>(shapes_.size()); ++i)
      if (shapes_[i].height <= h - 1) pool.push_back(i);
    std::vector<Shape> fresh;
    std::vector<int> seq;
    std::function<void(int, int)> rec = [&](int leaves, int cells) {
      if (seq.size() >= 2) {
        bool tall = false;
        for (int i : seq) tall = tall || shapes_[i].height == h - 1;
        if (tall) add(seq, leaves, cells, h, fresh);
      }
      for (int i : pool) {
        const auto& s = shapes_[i];
        if (leaves + s.leaves > max_leaves_ || cells + s.cells + 1 > max_cells_) continue;
        seq.push_back(i);
        rec(leaves + s.leaves, cells + s.cells);
        seq.pop_back();
      }
    };
    rec(0, 0);
    for (auto& s : fresh) shapes_.push_back(std::move(s));
  }

  void add(const std::vector<int>& seq, int leaves, int cells, int h, std::vector<Shape>& fresh) {
    std::string fwd, rev;
    for (int i : seq) fwd += shapes_[i].code;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) rev += shapes_[*it].code;
    const int size = static_cast<int>(seq.size()) + 1;
    std::string code = std::to_string(size) + "(" + std::min(fwd, rev) + ")";
    if (!seen_.insert(code).second) return;  // mirror image or repeat
    Shape s;
    s.leaves = leaves;
    s.cells = cells + 1;
    s.height = h;
    s.kids = seq;
    s.code = std::move(code);
    fresh.push_back(std::move(s));
  }

  int max_leaves_;
  int max_cells_;
  std::vector<Shape> shapes_;
  std::set<std::string> seen_;
};

// Lays the leaves of a shape out along the polygon boundary starting at side
// `next_side`, appending one diagonal per internal non-root cell.
int emit(const std::vector<Shape>& shapes, int idx, int n, int next_side, std::vector<Diagonal>& diags) {
  const Shape& s = shapes[idx];
  if (s.kids.empty()) return next_side + 1;
  const int first = next_side;
  for (int kid : s.kids) next_side = emit(shapes, kid, n, next_side, diags);
  diags.push_back(make_diagonal(first, next_side % n));
  return next_side;
}

}  // namespace

std::vector<Dissection> grow_class_representatives(int n, int k) {
  if (n < 3 || k < 0 || k > n - 3) throw std::invalid_argument("grow_class_representatives: bad (n, k)");
  ShapeGrower grower(n - 2, k);
  const auto& shapes = grower.shapes();
  std::map<ClassCode, Dissection> found;
  std::vector<int> seq;
  std::function<void(int, int)> rec = [&](int leaves, int cells) {
    if (seq.size() >= 3 && leaves == n && cells == k) {
      std::vector<Diagonal> diags;
      int side = 0;
      for (int i : seq) side = emit(shapes, i, n, side, diags);
      Dissection D(n, diags);
      found.try_emplace(class_code(D), std::move(D));
    }
    for (int i = 0; i < static_cast<int>(shapes.size()); ++i) {
      const auto& s = shapes[i];
      if (leaves + s.leaves > n || cells + s.cells > k) continue;
      seq.push_back(i);
      rec(leaves + s.leaves, cells + s.cells);
      seq.pop_back();
    }
  };
  rec(0, 0);
  std::vector<Dissection> out;
  for (auto& [code, D] : found) out.push_back(std::move(D));
  return out;
}

std::map<std::pair<int, int>, Integer> grown_edge_rooted_counts(int max_leaves) {
  ShapeGrower grower(max_leaves, max_leaves);
  std::map<std::pair<int, int>, Integer> counts;
  for (const auto& s : grower.shapes())
    if (s.cells > 0) counts[{s.cells, s.leaves}] += 1;
  return counts;
}

}  // namespace polycells
