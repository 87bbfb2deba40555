#pragma once

// Seeded random objects for the property checks.

#include <random>

#include "polycells/dissection.hpp"
#include "polycells/series.hpp"

namespace polycells::oracle {

/// Uniform n in [min_sides, max_sides], k in [min_k, n-3], diagonals added
/// greedily from a shuffled list of all diagonals.
Dissection random_dissection(std::mt19937_64& rng, int min_sides, int max_sides, int min_k = 0);

/// About half the coefficients nonzero, each p/q with |p| <= 3 and 1 <= q <= 3.
BivariateSeries random_series(std::mt19937_64& rng, SeriesBounds bounds);

}  // namespace polycells::oracle
