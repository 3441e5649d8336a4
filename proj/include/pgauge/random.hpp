#ifndef PGAUGE_RANDOM_HPP
#define PGAUGE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "pgauge/point.hpp"
#include "pgauge/sets.hpp"

namespace pgauge {

// Seeded generation helpers. Distributions are hand-rolled on top of the
// raw engine output so that a given seed produces the same stream on
// every standard library.

using Rng = std::mt19937_64;

/// Uniform double in [0, 1), 53-bit resolution.
double uniform01(Rng& rng);

/// Uniform double in [lo, hi).
double uniform(Rng& rng, double lo, double hi);

/// Uniform integer in {0, ..., n - 1}.
std::size_t uniform_index(Rng& rng, std::size_t n);

/// exp of a uniform draw on [log lo, log hi]; lo must be > 0.
double log_uniform(Rng& rng, double lo, double hi);

/// Random point with coordinates uniform in [lo, hi]. A positive
/// `quantum` snaps coordinates to multiples of it (useful to force exact
/// ties and duplicates).
UtilityPoint random_point(Rng& rng, std::size_t dim, double lo, double hi,
                          double quantum = 0.0);

/// Random set of 1..max_points such points.
FiniteUtilitySet random_set(Rng& rng, std::size_t dim,
                            std::size_t max_points, double lo, double hi,
                            double quantum = 0.0);

}  // namespace pgauge

#endif  // PGAUGE_RANDOM_HPP
