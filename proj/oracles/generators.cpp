#include "generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace polycells::oracle {

Dissection random_dissection(std::mt19937_64& rng, int min_sides, int max_sides, int min_k) {
  const int n = std::uniform_int_distribution<int>(min_sides, max_sides)(rng);
  if (min_k > n - 3) throw std::invalid_argument("random_dissection: k range is empty");
  const int k = std::uniform_int_distribution<int>(min_k, n - 3)(rng);
  std::vector<Diagonal> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (!(a == 0 && b == n - 1)) all.push_back({a, b});
  std::shuffle(all.begin(), all.end(), rng);
  // Any noncrossing set extends to a triangulation, so the greedy pass reaches k.
  std::vector<Diagonal> chosen;
  for (const auto& d : all) {
    if (static_cast<int>(chosen.size()) == k) break;
    if (std::none_of(chosen.begin(), chosen.end(), [&](Diagonal e) { return crosses(d, e); }))
      chosen.push_back(d);
  }
  return Dissection(n, std::move(chosen));
}

BivariateSeries random_series(std::mt19937_64& rng, SeriesBounds bounds) {
  BivariateSeries s(bounds);
  std::uniform_int_distribution<int> coin(0, 1), num(-3, 3), den(1, 3);
  for (int m = 0; m <= bounds.max_cell_deg; ++m)
    for (int n = 0; n <= bounds.max_edge_deg; ++n)
      if (coin(rng)) s.set_coefficient(m, n, ratio(num(rng), den(rng)));
  return s;
}

}  // namespace polycells::oracle
