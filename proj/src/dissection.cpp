#include "polycells/dissection.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "polycells/facecount.hpp"

namespace polycells {

Diagonal make_diagonal(int u, int w) {
  if (u == w) throw std::invalid_argument("a diagonal needs two distinct endpoints");
  return u < w ? Diagonal{u, w} : Diagonal{w, u};
}

bool crosses(Diagonal d, Diagonal e) {
  // With a < b and c < d, the chords cross iff exactly one endpoint of e lies strictly inside (a, b).
  auto inside = [&](int v) { return d.a < v && v < d.b; };
  auto on_d = [&](int v) { return v == d.a || v == d.b; };
  if (on_d(e.a) || on_d(e.b)) return false;
  return inside(e.a) != inside(e.b);
}

bool is_side(int n, Diagonal d) { return d.b == d.a + 1 || (d.a == 0 && d.b == n - 1); }

Dissection::Dissection(int n, std::vector<Diagonal> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
  if (n < 3) throw std::invalid_argument("a polygon has at least three sides");
  for (auto& d : diagonals_) {
    d = make_diagonal(d.a, d.b);
    if (d.a < 0 || d.b >= n) throw std::invalid_argument("diagonal endpoint out of range");
    if (is_side(n, d)) throw std::invalid_argument("diagonal joins adjacent vertices");
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end())
    throw std::invalid_argument("repeated diagonal");
  for (std::size_t i = 0; i < diagonals_.size(); ++i)
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
      if (crosses(diagonals_[i], diagonals_[j]))
        throw std::invalid_argument("diagonals cross");
}

bool Dissection::contains(Diagonal d) const {
  d = make_diagonal(d.a, d.b);
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

std::string Dissection::to_string() const {
  std::ostringstream out;
  out << n_ << ":{";
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    if (i) out << ",";
    out << "(" << diagonals_[i].a << "," << diagonals_[i].b << ")";
  }
  out << "}";
  return out.str();
}

namespace {

void backtrack(const std::vector<Diagonal>& all, std::size_t from, int need,
               std::vector<Diagonal>& chosen, int n, std::vector<Dissection>& out) {
  if (need == 0) {
    out.emplace_back(n, chosen);
    return;
  }
  for (std::size_t i = from; i + need <= all.size(); ++i) {
    const Diagonal d = all[i];
    bool ok = true;
    for (const auto& c : chosen)
      if (crosses(c, d)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(d);
    backtrack(all, i + 1, need - 1, chosen, n, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Dissection> enumerate_dissections(int n, int k) {
  if (n < 3) throw std::invalid_argument("enumerate_dissections needs n >= 3");
  if (k < 0 || k > n - 3)
    throw std::invalid_argument("an n-gon admits between 0 and n-3 noncrossing diagonals");
  std::vector<Diagonal> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (!is_side(n, {a, b})) all.push_back({a, b});
  std::vector<Dissection> out;
  std::vector<Diagonal> chosen;
  backtrack(all, 0, k, chosen, n, out);
  return out;
}

Dissection twist(const Dissection& D, Diagonal d) {
  d = make_diagonal(d.a, d.b);
  if (!D.contains(d)) throw std::invalid_argument("twist: " + D.to_string() + " has no such diagonal");
  std::vector<Diagonal> out;
  out.reserve(D.diagonals().size());
  auto in_piece = [&](int v) { return d.a <= v && v <= d.b; };
  for (const auto& e : D.diagonals()) {
    if (in_piece(e.a) && in_piece(e.b))
      out.push_back(make_diagonal(d.a + d.b - e.a, d.a + d.b - e.b));
    else
      out.push_back(e);
  }
  return Dissection(D.n(), std::move(out));
}

Dissection rotate(const Dissection& D, int steps) {
  const int n = D.n();
  const int s = ((steps % n) + n) % n;
  std::vector<Diagonal> out;
  for (const auto& e : D.diagonals()) out.push_back(make_diagonal((e.a + s) % n, (e.b + s) % n));
  return Dissection(n, std::move(out));
}

Dissection reflect(const Dissection& D) {
  const int n = D.n();
  std::vector<Diagonal> out;
  for (const auto& e : D.diagonals()) out.push_back(make_diagonal((n - e.a) % n, (n - e.b) % n));
  return Dissection(n, std::move(out));
}

std::vector<std::vector<int>> cells(const Dissection& D) {
  // Split polygons along diagonals until none remains inside any piece.
  std::vector<std::vector<int>> pieces;
  std::vector<int> whole(D.n());
  for (int v = 0; v < D.n(); ++v) whole[v] = v;
  std::vector<std::vector<int>> work{whole};
  while (!work.empty()) {
    auto piece = std::move(work.back());
    work.pop_back();
    bool split = false;
    for (const auto& d : D.diagonals()) {
      auto ia = std::find(piece.begin(), piece.end(), d.a);
      auto ib = std::find(piece.begin(), piece.end(), d.b);
      if (ia == piece.end() || ib == piece.end()) continue;
      const auto pa = ia - piece.begin();
      const auto pb = ib - piece.begin();
      const auto gap = pb - pa;
      if (gap == 1 || gap == static_cast<long>(piece.size()) - 1) continue;  // already an edge
      std::vector<int> left(piece.begin() + pa, piece.begin() + pb + 1);
      std::vector<int> right(piece.begin() + pb, piece.end());
      right.insert(right.end(), piece.begin(), piece.begin() + pa + 1);
      std::rotate(right.begin(), std::min_element(right.begin(), right.end()), right.end());
      work.push_back(std::move(left));
      work.push_back(std::move(right));
      split = true;
      break;
    }
    if (!split) pieces.push_back(std::move(piece));
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

TypeSignature signature(const Dissection& D) {
  std::map<int, int> m;
  for (const auto& c : cells(D)) ++m[static_cast<int>(c.size())];
  return TypeSignature(std::move(m));
}

}  // namespace polycells
