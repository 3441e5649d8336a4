#ifndef PGAUGE_INDEXES_HPP
#define PGAUGE_INDEXES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgauge/point.hpp"

namespace pgauge {

enum class IndexKind {
  Arithmetic,       // sum of coordinates
  Min,              // smallest coordinate
  Max,              // largest coordinate
  Geometric,        // product of coordinates
  Harmonic,         // 1 / sum(1/u_k), requires positive coordinates
  QuasiArithmetic,  // power mean ((1/n) sum u_k^delta)^(1/delta)
  Jain,             // (sum u)^2 / (n sum u^2)
  Owa               // ordered weighted average, ascending sort
};

/**
 * An index (aggregation operator) mapping a utility point to a scalar.
 * QuasiArithmetic carries an exponent delta in [-inf, +inf]; delta = 0 is
 * the geometric mean, -inf the min, +inf the max. Owa carries nonnegative
 * weights, not all zero, whose length must match the evaluated point.
 */
class IndexSpec {
 public:
  static IndexSpec arithmetic();
  static IndexSpec min();
  static IndexSpec max();
  static IndexSpec geometric();
  static IndexSpec harmonic();
  static IndexSpec quasi_arithmetic(double delta);
  static IndexSpec jain();
  static IndexSpec owa(std::vector<double> weights);

  [[nodiscard]] IndexKind kind() const { return kind_; }
  [[nodiscard]] double delta() const { return delta_; }
  [[nodiscard]] const std::vector<double>& owa_weights() const {
    return weights_;
  }

  /// False when the point lies outside the index's domain (zero
  /// coordinates for Harmonic and finite negative-delta QuasiArithmetic).
  [[nodiscard]] bool domain_ok(const UtilityPoint& u) const;

  /// Short stable label ("arithmetic", "quasi(0.5)", ...).
  [[nodiscard]] std::string name() const;

  friend bool operator==(const IndexSpec&, const IndexSpec&) = default;

 private:
  IndexSpec(IndexKind kind, double delta, std::vector<double> weights)
      : kind_(kind), delta_(delta), weights_(std::move(weights)) {}

  IndexKind kind_;
  double delta_ = 0.0;
  std::vector<double> weights_;
};

/// Evaluate the index at a point. Throws std::domain_error outside the
/// index's domain and std::invalid_argument on OWA weight-length mismatch.
double eval_index(const IndexSpec& f, const UtilityPoint& u);

/// The per-point fair share sum(u^2) / sum(u); the point u is Jain-fair
/// exactly when every coordinate equals it. Requires sum(u) > 0.
double jain_fair_point(const UtilityPoint& u);

/// Jain index of the coordinatewise ratios u_k / v_k. Requires v
/// strictly positive. Equals 1 exactly when u is proportional to v.
double jain_relative(const UtilityPoint& u, const UtilityPoint& v);

enum class Monotonicity { StrictlyMonotone, MonotoneNotStrict, NonMonotone };

/// Outcome of the randomized monotonicity search. The witness pair (u, v)
/// satisfies u <= v componentwise with u != v, and either f(u) > f(v)
/// (NonMonotone) or f(u) == f(v) (MonotoneNotStrict).
struct MonotonicityVerdict {
  Monotonicity verdict;
  std::optional<std::pair<UtilityPoint, UtilityPoint>> witness;
};

/**
 * Randomized classification of an index's monotonicity along the
 * componentwise order. Draws points with coordinates uniform in (0, 10],
 * perturbs random coordinate subsets upward, and reports the strongest
 * verdict consistent with all trials. Deterministic for a fixed seed.
 */
MonotonicityVerdict classify_monotonicity(const IndexSpec& f, std::size_t n,
                                          int trials, std::uint64_t seed);

}  // namespace pgauge

#endif  // PGAUGE_INDEXES_HPP
