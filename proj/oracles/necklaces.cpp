#include "necklaces.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace polycells::oracle {

std::uint64_t bracelet_count(int k, int q) {
  if (k < 1 || q < 1) throw std::invalid_argument("bracelet_count needs k, q >= 1");
  std::set<std::vector<int>> reps;
  std::vector<int> c(k, 0);
  while (true) {
    std::vector<int> best = c;
    for (int r = 0; r < k; ++r) {
      std::vector<int> rot(k), ref(k);
      for (int i = 0; i < k; ++i) {
        rot[i] = c[(i + r) % k];
        ref[i] = c[((r - i) % k + k) % k];
      }
      best = std::min({best, rot, ref});
    }
    reps.insert(best);
    int i = 0;
    while (i < k && ++c[i] == q) c[i++] = 0;
    if (i == k) break;
  }
  return reps.size();
}

}  // namespace polycells::oracle
