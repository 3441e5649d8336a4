#ifndef PGAUGE_SETS_HPP
#define PGAUGE_SETS_HPP

#include <cstddef>
#include <vector>

#include "pgauge/point.hpp"

namespace pgauge {

/**
 * A finite, nonempty collection of utility points of uniform dimension.
 * Duplicates are allowed; order is preserved as given.
 */
class FiniteUtilitySet {
 public:
  explicit FiniteUtilitySet(std::vector<UtilityPoint> points);

  [[nodiscard]] const std::vector<UtilityPoint>& points() const {
    return points_;
  }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] std::size_t dim() const { return points_.front().dim(); }

  /// Membership up to L-infinity distance `tol`.
  [[nodiscard]] bool contains(const UtilityPoint& p, double tol = kTol) const;

  /// True iff both sets contain exactly the same point values
  /// (duplicates and order ignored).
  [[nodiscard]] bool same_points(const FiniteUtilitySet& other) const;

 private:
  std::vector<UtilityPoint> points_;
};

/// One linear inequality: weights . u <= bound.
struct LinearConstraint {
  std::vector<double> weights;
  double bound = 0.0;
};

/**
 * Intersection of halfspaces over the nonnegative orthant:
 *   { u >= 0 : weights_c . u <= bound_c for every constraint c }.
 *
 * Construction verifies the set is bounded (every axis capped by some
 * all-nonnegative constraint) and nonempty (a coarse grid probe over the
 * bounding box finds a feasible point). The probe is conservative: very
 * thin feasible regions may be rejected even though they are nonempty.
 */
class HalfspaceSet {
 public:
  HalfspaceSet(std::size_t n, std::vector<LinearConstraint> constraints);

  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }

  /// Per-axis upper bounds derived from the constraints.
  [[nodiscard]] const std::vector<double>& bounding_box() const {
    return box_;
  }

  [[nodiscard]] bool feasible(const std::vector<double>& u,
                              double tol = kTol) const;
  [[nodiscard]] bool feasible(const UtilityPoint& u, double tol = kTol) const;

 private:
  std::size_t n_;
  std::vector<LinearConstraint> constraints_;
  std::vector<double> box_;
};

/**
 * The scalable family S_{M,N}: utility sets
 *   { u >= 0 : u_1 / M + u_2 + ... + u_N <= 1 }
 * where the first player's utility is cheap by a factor M.
 * M > 0 (real), N >= 2 (number of players).
 */
class SmnFamily {
 public:
  SmnFamily(double M, int N);

  [[nodiscard]] double M() const { return m_; }
  [[nodiscard]] int N() const { return n_; }

 private:
  double m_;
  int n_;
};

/// Hausdorff distance between two finite sets under metric m:
/// max over both directions of (max over one set of the min distance
/// to the other).
double hausdorff(const FiniteUtilitySet& a, const FiniteUtilitySet& b,
                 Metric m = Metric::LInf);

/// All points of the uniform axis-aligned grid over H's bounding box
/// (`resolution` points per axis, resolution >= 2) that satisfy every
/// constraint within tolerance 1e-9. Grid size grows as resolution^dim.
FiniteUtilitySet discretize(const HalfspaceSet& h, int resolution);

/// The single-constraint halfspace representation of S_{M,N}:
/// weights (1/M, 1, ..., 1), bound 1.
HalfspaceSet smn_halfspaces(const SmnFamily& family);

/// Coordinatewise natural logarithm of every point. Output coordinates
/// may be negative; they are plain real vectors, not utility points.
/// Throws when any coordinate is <= 0, naming the offending point.
std::vector<std::vector<double>> log_map(const FiniteUtilitySet& u);

}  // namespace pgauge

#endif  // PGAUGE_SETS_HPP
