#include "pgauge/indexes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pgauge/random.hpp"

namespace pgauge {

IndexSpec IndexSpec::arithmetic() {
  return {IndexKind::Arithmetic, 0.0, {}};
}
IndexSpec IndexSpec::min() { return {IndexKind::Min, 0.0, {}}; }
IndexSpec IndexSpec::max() { return {IndexKind::Max, 0.0, {}}; }
IndexSpec IndexSpec::geometric() { return {IndexKind::Geometric, 0.0, {}}; }
IndexSpec IndexSpec::harmonic() { return {IndexKind::Harmonic, 0.0, {}}; }

IndexSpec IndexSpec::quasi_arithmetic(double delta) {
  if (std::isnan(delta)) {
    throw std::invalid_argument("quasi-arithmetic delta must not be NaN");
  }
  return {IndexKind::QuasiArithmetic, delta, {}};
}

IndexSpec IndexSpec::jain() { return {IndexKind::Jain, 0.0, {}}; }

IndexSpec IndexSpec::owa(std::vector<double> weights) {
  if (weights.empty()) {
    throw std::invalid_argument("owa weights must be nonempty");
  }
  bool any_positive = false;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("owa weights must be nonnegative");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) {
    throw std::invalid_argument("owa weights must not all be zero");
  }
  return {IndexKind::Owa, 0.0, std::move(weights)};
}

bool IndexSpec::domain_ok(const UtilityPoint& u) const {
  const bool needs_positive =
      kind_ == IndexKind::Harmonic ||
      (kind_ == IndexKind::QuasiArithmetic && delta_ < 0.0 &&
       std::isfinite(delta_));
  return !needs_positive || u.all_positive();
}

std::string IndexSpec::name() const {
  switch (kind_) {
    case IndexKind::Arithmetic: return "arithmetic";
    case IndexKind::Min: return "min";
    case IndexKind::Max: return "max";
    case IndexKind::Geometric: return "geometric";
    case IndexKind::Harmonic: return "harmonic";
    case IndexKind::Jain: return "jain";
    case IndexKind::Owa: return "owa";
    case IndexKind::QuasiArithmetic: {
      std::ostringstream out;
      out << "quasi(" << delta_ << ")";
      return out.str();
    }
  }
  return "unknown";
}

namespace {

double sum_of(const UtilityPoint& u) {
  return std::accumulate(u.coords().begin(), u.coords().end(), 0.0);
}

double eval_quasi(double delta, const UtilityPoint& u) {
  const double n = static_cast<double>(u.dim());
  if (std::isinf(delta)) {
    const auto& c = u.coords();
    return delta > 0.0 ? *std::max_element(c.begin(), c.end())
                       : *std::min_element(c.begin(), c.end());
  }
  if (delta == 0.0) {
    // Geometric mean, the continuous limit between the two power-mean
    // branches.
    double log_sum = 0.0;
    for (double c : u.coords()) {
      if (c == 0.0) return 0.0;
      log_sum += std::log(c);
    }
    return std::exp(log_sum / n);
  }
  if (delta < 0.0 && !u.all_positive()) {
    throw std::domain_error(
        "quasi-arithmetic with negative delta undefined at zero coordinate " +
        u.to_string());
  }
  double mean = 0.0;
  for (double c : u.coords()) mean += std::pow(c, delta) / n;
  return std::pow(mean, 1.0 / delta);
}

}  // namespace

double eval_index(const IndexSpec& f, const UtilityPoint& u) {
  const auto& c = u.coords();
  switch (f.kind()) {
    case IndexKind::Arithmetic:
      return sum_of(u);
    case IndexKind::Min:
      return *std::min_element(c.begin(), c.end());
    case IndexKind::Max:
      return *std::max_element(c.begin(), c.end());
    case IndexKind::Geometric: {
      double prod = 1.0;
      for (double x : c) prod *= x;
      return prod;
    }
    case IndexKind::Harmonic: {
      double inv_sum = 0.0;
      for (double x : c) {
        if (x == 0.0) {
          throw std::domain_error("harmonic index undefined at point " +
                                  u.to_string() + " with a zero coordinate");
        }
        inv_sum += 1.0 / x;
      }
      return 1.0 / inv_sum;
    }
    case IndexKind::QuasiArithmetic:
      return eval_quasi(f.delta(), u);
    case IndexKind::Jain: {
      const double s1 = sum_of(u);
      if (s1 == 0.0) return 1.0 / static_cast<double>(u.dim());
      double s2 = 0.0;
      for (double x : c) s2 += x * x;
      return s1 * s1 / (static_cast<double>(u.dim()) * s2);
    }
    case IndexKind::Owa: {
      const auto& w = f.owa_weights();
      if (w.size() != u.dim()) {
        throw std::invalid_argument(
            "owa weights length " + std::to_string(w.size()) +
            " does not match point dimension " + std::to_string(u.dim()));
      }
      std::vector<double> sorted(c);
      std::sort(sorted.begin(), sorted.end());
      double acc = 0.0;
      for (std::size_t k = 0; k < sorted.size(); ++k) acc += w[k] * sorted[k];
      return acc;
    }
  }
  throw std::logic_error("unhandled index kind");
}

double jain_fair_point(const UtilityPoint& u) {
  const double s1 = sum_of(u);
  if (s1 == 0.0) {
    throw std::domain_error("fair share undefined for the all-zero point");
  }
  double s2 = 0.0;
  for (double x : u.coords()) s2 += x * x;
  return s2 / s1;
}

double jain_relative(const UtilityPoint& u, const UtilityPoint& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("jain_relative: dimension mismatch");
  }
  std::vector<double> ratios(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) {
    if (!(v[k] > 0.0)) {
      throw std::domain_error(
          "jain_relative: reference point has a zero coordinate at index " +
          std::to_string(k));
    }
    ratios[k] = u[k] / v[k];
  }
  return eval_index(IndexSpec::jain(), UtilityPoint(std::move(ratios)));
}

MonotonicityVerdict classify_monotonicity(const IndexSpec& f, std::size_t n,
                                          int trials, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("classify_monotonicity needs n >= 1");
  Rng rng(seed);
  std::optional<std::pair<UtilityPoint, UtilityPoint>> equal_witness;

  for (int t = 0; t < trials; ++t) {
    std::vector<double> base(n);
    for (auto& c : base) c = 10.0 * (1.0 - uniform01(rng));  // (0, 10]

    // Push a random nonempty coordinate subset upward. The floor on the
    // step keeps v distinguishable from u after rounding.
    const double scale = std::pow(10.0, uniform(rng, -3.0, 0.5));
    const bool bump_all = uniform01(rng) < 1.0 / 3.0;
    std::vector<double> bumped = base;
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (bump_all || uniform01(rng) < 0.5) {
        bumped[k] += scale * uniform(rng, 0.1, 1.0);
        any = true;
      }
    }
    if (!any) bumped[uniform_index(rng, n)] += scale * uniform(rng, 0.1, 1.0);

    const UtilityPoint u(base);
    const UtilityPoint v(bumped);
    if (!f.domain_ok(u) || !f.domain_ok(v)) continue;
    const double fu = eval_index(f, u);
    const double fv = eval_index(f, v);
    if (fu > fv) {
      return {Monotonicity::NonMonotone, std::make_pair(u, v)};
    }
    if (fu == fv && !equal_witness) {
      equal_witness = std::make_pair(u, v);
    }
  }
  if (equal_witness) {
    return {Monotonicity::MonotoneNotStrict, equal_witness};
  }
  return {Monotonicity::StrictlyMonotone, std::nullopt};
}

}  // namespace pgauge
