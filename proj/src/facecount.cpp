#include "polycells/facecount.hpp"

#include <stdexcept>
#include <string>

namespace polycells {

void FaceQuery::validate() const {
  if (n < 2) throw std::invalid_argument("K_n needs n >= 2, got n = " + std::to_string(n));
  if (k < 0 || k > n - 2)
    throw std::invalid_argument("codimension k = " + std::to_string(k) + " is outside [0, " +
                                std::to_string(n - 2) + "] for K_" + std::to_string(n));
}

Integer cayley_faces(FaceQuery q) {
  q.validate();
  Integer num = binomial(q.n + q.k, q.k) * binomial(q.n - 2, q.k);
  return num / (q.k + 1);
}

Integer catalan(int n) {
  if (n < 2) throw std::invalid_argument("catalan needs n >= 2");
  return binomial(2 * n - 2, n - 1) / n;
}

Integer schroder(int n) {
  if (n < 2) throw std::invalid_argument("schroder needs n >= 2");
  Integer total = 0;
  for (int k = 0; k <= n - 2; ++k) total += cayley_faces(n, k);
  return total;
}

Integer moduli_faces(int n, int k) {
  FaceQuery{n, k}.validate();
  Integer num = factorial(n) * cayley_faces(n, k);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(k + 1));
  if (num % den != 0) throw std::logic_error("moduli face count is not integral");
  return num / den;
}

Integer binary_coupling_vertices(int n) {
  if (n < 2) throw std::invalid_argument("binary_coupling_vertices needs n >= 2");
  Integer r = 1;
  for (int j = 2 * n - 3; j > 1; j -= 2) r *= j;
  return r;
}

}  // namespace polycells
