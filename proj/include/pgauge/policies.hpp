#ifndef PGAUGE_POLICIES_HPP
#define PGAUGE_POLICIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgauge/indexes.hpp"
#include "pgauge/pareto.hpp"
#include "pgauge/point.hpp"
#include "pgauge/sets.hpp"

namespace pgauge {

/// Deterministic tie-breaking between equally good candidates:
/// lexicographically smallest or largest coordinate vector.
enum class TieBreak { LexMin, LexMax };

/**
 * An allocation policy: a deterministic choice of one point from any
 * finite utility set.
 *
 *  - IndexOpt: maximize an index, ties broken per TieBreak. Points
 *    outside the index's domain are excluded from the argmax.
 *  - MaxMinFair: leximin-maximal point (compare ascending-sorted
 *    coordinate vectors lexicographically), ties broken per TieBreak.
 *  - Fixed: always returns the stored point, which must belong to the
 *    set it is applied to.
 */
class PolicySpec {
 public:
  enum class Kind { IndexOpt, MaxMinFair, Fixed };

  static PolicySpec index_opt(IndexSpec index,
                              TieBreak tiebreak = TieBreak::LexMax);
  static PolicySpec maxmin_fair(TieBreak tiebreak = TieBreak::LexMax);
  static PolicySpec fixed(UtilityPoint point);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const IndexSpec& index() const;
  [[nodiscard]] TieBreak tiebreak() const { return tiebreak_; }
  [[nodiscard]] const UtilityPoint& fixed_point() const;
  [[nodiscard]] std::string label() const;

 private:
  PolicySpec(Kind kind, std::optional<IndexSpec> index, TieBreak tiebreak,
             std::optional<UtilityPoint> point);

  Kind kind_;
  std::optional<IndexSpec> index_;
  TieBreak tiebreak_;
  std::optional<UtilityPoint> point_;
};

/// Apply the policy; the result is always a member of `set`.
UtilityPoint apply_policy(const PolicySpec& policy,
                          const FiniteUtilitySet& set);

/// The three closed-form optimizers over S_{M,N} (all saturate the
/// constraint exactly):
///   Sum      -> (M, 0, ..., 0)
///   Min      -> the equal-share point (c, ..., c), c = 1/(N - 1 + 1/M)
///   Product  -> (M/N, 1/N, ..., 1/N)
enum class SmnObjective { Sum, Min, Product };

UtilityPoint smn_closed_form(SmnObjective objective, const SmnFamily& family);

/// Evidence that enlarging the feasible set strictly hurt every player:
/// u1 is contained in u2 yet the policy's pick on u2 is strictly below
/// its pick on u1 in every coordinate.
struct BraessWitness {
  FiniteUtilitySet u1;
  FiniteUtilitySet u2;
  UtilityPoint a1;
  UtilityPoint a2;
};

/// Detect the anomaly above for one nested pair. u1 must be a subset of
/// u2 within tolerance 1e-9.
std::optional<BraessWitness> braess_detect(const PolicySpec& policy,
                                           const FiniteUtilitySet& u1,
                                           const FiniteUtilitySet& u2);

/// First chain position where f of the policy's pick strictly decreases
/// (margin 1e-9) along a growing chain of sets.
struct FIncreasingViolation {
  std::size_t index;
  double value_before;
  double value_after;
};

std::optional<FIncreasingViolation> check_f_increasing(
    const PolicySpec& policy, const IndexSpec& f,
    const std::vector<FiniteUtilitySet>& chain);

/// A pair of points ordered oppositely by two indexes, plus the
/// two-element growing chain [{x2}, {x1, x2}] on which optimizing g
/// makes f strictly drop.
struct CrossIndexWitness {
  UtilityPoint x1;
  UtilityPoint x2;
  std::vector<FiniteUtilitySet> chain;
};

/// Randomized search for points with f(x1) < f(x2) and g(x2) < g(x1),
/// both strict with margin 1e-6. Coordinates are drawn log-uniformly
/// from [0.1, 10]. Deterministic for a fixed seed; std::nullopt after
/// `trials` failures (e.g. when f and g order all points identically).
std::optional<CrossIndexWitness> find_cross_index_violation(
    const IndexSpec& f, const IndexSpec& g, std::size_t n, int trials,
    std::uint64_t seed);

/// The built-in policy catalog used by demos and property checks.
std::vector<PolicySpec> policy_catalog();

}  // namespace pgauge

#endif  // PGAUGE_POLICIES_HPP
