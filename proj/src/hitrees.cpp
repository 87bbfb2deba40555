#include "polycells/hitrees.hpp"

#include <stdexcept>
#include <vector>

#include "polycells/clusters.hpp"
#include "polycells/facecount.hpp"
#include "polycells/polya.hpp"

namespace polycells {

bool DegreePartition::valid() const {
  int count = m1, degree_sum = m1;
  for (const auto& [i, c] : mi) {
    if (i < 3 || c < 0) return false;
    count += c;
    degree_sum += i * c;
  }
  return count == m && degree_sum == 2 * (m - 1);
}

std::string DegreePartition::to_string() const {
  std::string s = std::to_string(m) + ": t1^" + std::to_string(m1);
  for (const auto& [i, c] : mi)
    if (c > 0) s += " t" + std::to_string(i) + "^" + std::to_string(c);
  return s;
}

MultivariateSeries hi_tree_series(int max_vertices) {
  if (max_vertices < 2) throw std::invalid_argument("hi_tree_series needs max_vertices >= 2");
  if (max_vertices > MultivariateSeries::kMaxDegree)
    throw std::invalid_argument("hi_tree_series supports at most 15 vertices");
  std::vector<std::string> vars{"x", "t1"};
  for (int d = 3; d <= max_vertices - 1; ++d) vars.push_back("t" + std::to_string(d));
  const MultivariateSeries shape(vars, std::vector<int>(vars.size(), max_vertices));
  const auto x = MultivariateSeries::variable_like(shape, "x");
  const auto t1 = MultivariateSeries::variable_like(shape, "t1");
  auto t = [&](int d) { return MultivariateSeries::variable_like(shape, "t" + std::to_string(d)); };

  std::vector<CycleIndex> h;
  for (int j = 0; j <= max_vertices; ++j) h.push_back(symmetric_cycle_index(j));

  // Planted trees: every pass settles one more power of x.
  MultivariateSeries P = x * t1;
  bool converged = false;
  for (int pass = 0; pass < max_vertices + 2; ++pass) {
    Plethysm<MultivariateSeries> sub(P);
    MultivariateSeries inner = t1;
    for (int d = 3; d <= max_vertices - 1; ++d) inner += t(d) * sub(h[d - 1]);
    auto next = x * inner;
    if (next == P) {
      converged = true;
      break;
    }
    P = std::move(next);
  }
  if (!converged) throw std::runtime_error("hi_tree_series: planted-tree iteration did not converge");

  Plethysm<MultivariateSeries> sub(P);
  MultivariateSeries rooted = t1 * P;
  for (int d = 3; d <= max_vertices - 1; ++d) rooted += t(d) * sub(h[d]);
  const auto R = x * rooted;
  const auto asymmetric_pairs = ratio(1, 2) * (P * P - power_substitute(P, 2));
  auto H = R - asymmetric_pairs;
  if (!H.is_integral()) throw std::logic_error("hi_tree_series: non-integral coefficient");
  return H;
}

std::map<DegreePartition, Integer> degree_partition_counts(const MultivariateSeries& H) {
  std::map<DegreePartition, Integer> out;
  const auto& vars = H.variables();
  for (const auto& [mono, c] : H.packed_terms()) {
    const auto e = H.unpack(mono);
    DegreePartition p;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == "x")
        p.m = e[i];
      else if (vars[i] == "t1")
        p.m1 = e[i];
      else if (e[i] > 0)
        p.mi[std::stoi(vars[i].substr(1))] = e[i];
    }
    if (!is_integer(c)) throw std::logic_error("non-integral tree count");
    out[p] = c.get_num();
  }
  return out;
}

std::map<DegreePartition, Integer> trees_for_face_census(int n, int k) {
  FaceQuery{n, k}.validate();
  const int leaves = n + 1;
  const int m = leaves + k + 1;
  if (m > MultivariateSeries::kMaxDegree)
    throw std::invalid_argument("trees_for_face_census: trees beyond 15 vertices are not supported");
  std::map<DegreePartition, Integer> out;
  for (auto& [p, c] : degree_partition_counts(hi_tree_series(m))) {
    int internal = 0;
    for (const auto& [i, cnt] : p.mi) internal += cnt;
    if (p.m == m && p.m1 == leaves && internal == k + 1) out.emplace(p, c);
  }
  return out;
}

Integer phylo_count(int n) {
  if (n < 1) throw std::invalid_argument("phylo_count needs n >= 1");
  std::vector<Integer> T(std::max(n, 2) + 1);
  T[1] = 1;
  T[2] = 1;
  for (int j = 3; j <= n; ++j) {
    Integer v = Integer(2 - j) * T[j - 1];
    for (int i = 1; i <= j - 2; ++i) v += T[i + 1] * T[j - i] * binomial(j - 1, i);
    T[j] = v;
  }
  return T[n];
}

Integer rooted_phylo_count(int n) {
  if (n < 1) throw std::invalid_argument("rooted_phylo_count needs n >= 1");
  return phylo_count(n + 1);
}

Integer wedderburn(int n, const BivariateSeries& A) {
  if (n < 2) throw std::invalid_argument("wedderburn needs n >= 2");
  if (n - 1 > A.max_cell_deg() || n > A.max_edge_deg())
    throw std::out_of_range("A series is too small for w_" + std::to_string(n));
  return A.coefficient(n - 1, n).get_num();
}

Integer wedderburn(int n) {
  if (n < 2) throw std::invalid_argument("wedderburn needs n >= 2");
  return wedderburn(n, compute_A({n - 1, n}));
}

Integer brackets_on_commuting(int k, int n, const BivariateSeries& A) {
  if (k < 0 || n < 1) throw std::invalid_argument("brackets_on_commuting needs k >= 0, n >= 1");
  if (k + 1 > A.max_cell_deg() || n > A.max_edge_deg())
    throw std::out_of_range("A series is too small");
  return A.coefficient(k + 1, n).get_num();
}

}  // namespace polycells
