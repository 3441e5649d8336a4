#include "pgauge/random.hpp"

#include <cmath>

namespace pgauge {

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)) %
         n;
}

double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

UtilityPoint random_point(Rng& rng, std::size_t dim, double lo, double hi,
                          double quantum) {
  std::vector<double> coords(dim);
  for (auto& c : coords) {
    if (quantum > 0.0) {
      const auto lo_steps = static_cast<long long>(std::ceil(lo / quantum));
      const auto hi_steps = static_cast<long long>(std::floor(hi / quantum));
      const auto span = static_cast<std::size_t>(hi_steps - lo_steps + 1);
      c = quantum * static_cast<double>(
                        lo_steps + static_cast<long long>(
                                       uniform_index(rng, span)));
    } else {
      c = uniform(rng, lo, hi);
    }
  }
  return UtilityPoint(std::move(coords));
}

FiniteUtilitySet random_set(Rng& rng, std::size_t dim,
                            std::size_t max_points, double lo, double hi,
                            double quantum) {
  const std::size_t count = 1 + uniform_index(rng, max_points);
  std::vector<UtilityPoint> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    points.push_back(random_point(rng, dim, lo, hi, quantum));
  }
  return FiniteUtilitySet(std::move(points));
}

}  // namespace pgauge
