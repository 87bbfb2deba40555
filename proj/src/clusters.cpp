#include "polycells/clusters.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "polycells/polya.hpp"

namespace polycells {

namespace {

// Iterates next = step(current) from `start` until two successive iterates
// agree. Each pass fixes at least one more x-degree, so max_cell_deg + 2
// passes always suffice for a correct right-hand side.
BivariateSeries solve_fixed_point(const BivariateSeries& start,
                                  const std::function<BivariateSeries(const BivariateSeries&)>& step,
                                  const char* name) {
  BivariateSeries current = start;
  const int limit = start.max_cell_deg() + 2;
  for (int pass = 0; pass < limit; ++pass) {
    BivariateSeries next = step(current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw std::runtime_error(std::string(name) + ": fixed-point iteration did not converge");
}

void require_counting_series(const BivariateSeries& s, const char* name) {
  if (!s.is_integral())
    throw std::logic_error(std::string(name) + " has a non-integral coefficient");
  if (s.has_negative_coefficient())
    throw std::logic_error(std::string(name) + " has a negative coefficient");
}

}  // namespace

BivariateSeries compute_A(SeriesBounds bounds) {
  if (bounds.max_cell_deg < 1 || bounds.max_edge_deg < 1)
    throw std::invalid_argument("compute_A needs positive bounds");
  const auto x = BivariateSeries::x(bounds);
  const auto y = BivariateSeries::y(bounds);
  const auto one = BivariateSeries::one(bounds);
  const Rational half = ratio(1, 2);
  auto A = solve_fixed_point(
      y,
      [&](const BivariateSeries& a) {
        const auto a2 = power_substitute(a, 2);
        auto bracket = mul(mul(a, a), geom_reciprocal(a)) +
                       mul(mul(one + a, a2), geom_reciprocal(a2));
        return y + half * mul(x, bracket);
      },
      "compute_A");
  require_counting_series(A, "A");
  return A;
}

Integer closed_form_v(int m, int n) {
  if (m == 0) return n == 1 ? 1 : 0;
  if (m < 1 || n < 2) return 0;
  Integer num = binomial(n - 2, m - 1) * binomial(m + n - 1, n);
  if (num % m != 0) throw std::logic_error("closed form for v is not integral");
  return num / m;
}

BivariateSeries compute_V(SeriesBounds bounds) {
  if (bounds.max_cell_deg < 1 || bounds.max_edge_deg < 1)
    throw std::invalid_argument("compute_V needs positive bounds");
  const auto x = BivariateSeries::x(bounds);
  const auto y = BivariateSeries::y(bounds);
  auto V = solve_fixed_point(
      y, [&](const BivariateSeries& v) { return y + mul(x, mul(mul(v, v), geom_reciprocal(v))); },
      "compute_V");
  for (int m = 0; m <= bounds.max_cell_deg; ++m) {
    for (int n = 0; n <= bounds.max_edge_deg; ++n) {
      if (V.coefficient(m, n) != Rational(closed_form_v(m, n))) {
        std::ostringstream msg;
        msg << "compute_V: v_{" << m << "," << n << "} = " << V.coefficient(m, n).get_str()
            << " disagrees with the closed form " << closed_form_v(m, n).get_str();
        throw std::logic_error(msg.str());
      }
    }
  }
  return V;
}

BivariateSeries compute_B(const BivariateSeries& A) {
  const auto bounds = A.bounds();
  Plethysm<BivariateSeries> substitute(A);
  auto sum = BivariateSeries::zero(bounds);
  // A root cell with k sides carries y-degree >= k, so k > max_edge_deg adds nothing.
  for (int k = 3; k <= bounds.max_edge_deg; ++k) sum += substitute(dihedral_cycle_index(k));
  auto B = mul(BivariateSeries::x(bounds), sum);
  require_counting_series(B, "B");
  return B;
}

BivariateSeries compute_C(const BivariateSeries& A) {
  const auto bounds = A.bounds();
  const auto y = BivariateSeries::y(bounds);
  const auto nonempty = A - y;
  const auto nonempty2 = power_substitute(A, 2) - power_substitute(y, 2);
  auto C = ratio(1, 2) * (mul(nonempty, nonempty) - nonempty2);
  require_counting_series(C, "C");
  return C;
}

BivariateSeries compute_F(const BivariateSeries& B, const BivariateSeries& C) {
  auto F = B - C;
  require_counting_series(F, "F");
  return F;
}

ClusterSeriesSet compute_cluster_series(SeriesBounds bounds) {
  auto A = compute_A(bounds);
  auto V = compute_V(bounds);
  auto B = compute_B(A);
  auto C = compute_C(A);
  auto F = compute_F(B, C);
  return {std::move(A), std::move(V), std::move(B), std::move(C), std::move(F), bounds};
}

}  // namespace polycells
