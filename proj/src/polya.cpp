#include "polycells/polya.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polycells {

namespace {

CycleType normalize(CycleType type) {
  std::sort(type.begin(), type.end());
  CycleType out;
  for (const auto& [r, e] : type) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == r)
      out.back().second += e;
    else
      out.emplace_back(r, e);
  }
  return out;
}

}  // namespace

void CycleIndex::add_term(CycleType type, const Rational& c) {
  type = normalize(std::move(type));
  int sites = 0;
  for (const auto& [r, e] : type) {
    if (r < 1 || e < 0) throw std::invalid_argument("malformed cycle type");
    sites += r * e;
  }
  if (sites != degree_) throw std::invalid_argument("cycle type does not permute degree sites");
  auto& slot = terms_[type];
  slot += c;
  if (slot == 0) terms_.erase(type);
}

Rational CycleIndex::coefficient(const CycleType& type) const {
  auto it = terms_.find(normalize(type));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational CycleIndex::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [t, c] : terms_) s += c;
  return s;
}

Rational CycleIndex::evaluate_uniform(const Rational& q) const {
  Rational total = 0;
  for (const auto& [type, c] : terms_) {
    Rational term = c;
    for (const auto& [r, e] : type)
      for (int i = 0; i < e; ++i) term *= q;
    total += term;
  }
  return total;
}

std::string CycleIndex::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [type, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    for (const auto& [r, e] : type) {
      out << "*s" << r;
      if (e != 1) out << "^" << e;
    }
  }
  if (first) out << "0";
  return out.str();
}

int euler_phi(int r) {
  if (r < 1) throw std::invalid_argument("euler_phi needs r >= 1");
  int result = r;
  int m = r;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

CycleIndex root_edge_cycle_index(int k) {
  if (k < 2) throw std::invalid_argument("root_edge_cycle_index needs k >= 2");
  CycleIndex z(k);
  const int alpha = k / 2;
  const Rational half = ratio(1, 2);
  z.add_term({{1, k}}, half);
  if (k % 2 == 0)
    z.add_term({{2, alpha}}, half);
  else
    z.add_term({{1, 1}, {2, alpha}}, half);
  return z;
}

CycleIndex dihedral_cycle_index(int k) {
  if (k < 3) throw std::invalid_argument("dihedral_cycle_index needs k >= 3");
  CycleIndex z(k);
  for (int r = 1; r <= k; ++r)
    if (k % r == 0) z.add_term({{r, k / r}}, ratio(euler_phi(r), 2 * k));
  const int alpha = k / 2;
  if (k % 2 == 0) {
    z.add_term({{1, 2}, {2, alpha - 1}}, ratio(1, 4));
    z.add_term({{2, alpha}}, ratio(1, 4));
  } else {
    z.add_term({{1, 1}, {2, alpha}}, ratio(1, 2));
  }
  return z;
}

CycleIndex symmetric_cycle_index(int n) {
  if (n < 0) throw std::invalid_argument("symmetric_cycle_index needs n >= 0");
  // Z(S_n) = (1/n) sum_{r=1}^{n} s_r Z(S_{n-r})
  std::vector<CycleIndex> z;
  z.emplace_back(0);
  z[0].add_term({}, 1);
  for (int m = 1; m <= n; ++m) {
    CycleIndex next(m);
    for (int r = 1; r <= m; ++r) {
      for (const auto& [type, c] : z[m - r].terms()) {
        CycleType t = type;
        t.emplace_back(r, 1);
        next.add_term(std::move(t), c / m);
      }
    }
    z.push_back(std::move(next));
  }
  return z[n];
}

BivariateSeries plethysm(const CycleIndex& z, const BivariateSeries& figure) {
  return Plethysm<BivariateSeries>(figure)(z);
}

MultivariateSeries plethysm(const CycleIndex& z, const MultivariateSeries& figure) {
  return Plethysm<MultivariateSeries>(figure)(z);
}

}  // namespace polycells
