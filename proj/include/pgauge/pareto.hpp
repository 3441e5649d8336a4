#ifndef PGAUGE_PARETO_HPP
#define PGAUGE_PARETO_HPP

#include <optional>
#include <utility>

#include "pgauge/point.hpp"
#include "pgauge/sets.hpp"

namespace pgauge {

/// The maximal points of a finite set, with the size of the set they
/// were filtered from. On a finite set the front and the optimum set
/// coincide; no closure is taken.
struct ParetoFront {
  FiniteUtilitySet points;
  std::size_t source_size;
};

/// Keep exactly the points no other point improves on (componentwise >=
/// with at least one strict coordinate). Exact duplicates collapse to one
/// representative; first-occurrence order is preserved.
ParetoFront pareto_filter(const FiniteUtilitySet& u);

/// True iff no point of `set` improves on u. u must belong to `set`
/// within tolerance 1e-9 (std::invalid_argument otherwise).
bool is_pareto_optimal(const UtilityPoint& u, const FiniteUtilitySet& set);

/// True iff some point of `set` strictly exceeds u in every coordinate.
bool is_strictly_dominated(const UtilityPoint& u,
                           const FiniteUtilitySet& set);

/**
 * A neighborhood of a finite set: either the additive form (all points
 * within metric distance `radius` of the base) or the multiplicative
 * form (log-space ball of radius log(factor), i.e. every coordinate of a
 * member is within a factor of `factor` of some base point, in the
 * log-space metric). Additive requires radius >= 0; multiplicative
 * requires factor >= 1 and a strictly positive base.
 */
class Expansion {
 public:
  enum class Form { Additive, Multiplicative };

  static Expansion additive(FiniteUtilitySet base, double radius,
                            Metric metric = Metric::LInf);
  static Expansion multiplicative(FiniteUtilitySet base, double factor,
                                  Metric metric = Metric::LInf);

  [[nodiscard]] Form form() const { return form_; }
  [[nodiscard]] const FiniteUtilitySet& base() const { return base_; }
  [[nodiscard]] double radius() const { return value_; }
  [[nodiscard]] double factor() const { return value_; }
  [[nodiscard]] Metric metric() const { return metric_; }

 private:
  Expansion(Form form, FiniteUtilitySet base, double value, Metric metric)
      : form_(form), base_(std::move(base)), value_(value), metric_(metric) {}

  Form form_;
  FiniteUtilitySet base_;
  double value_;
  Metric metric_;
};

/// Membership of p in the expanded set. Multiplicative expansions
/// require p strictly positive.
bool expand_contains(const Expansion& e, const UtilityPoint& p);

struct EpsCoverage {
  bool covered;
  std::optional<UtilityPoint> uncovered;  // first witness when not covered
};

/// Check that S covers U up to factor (1 + eps): for every u in U some
/// s in S has u_k <= (1+eps) s_k in every coordinate. S must be a subset
/// of U within tolerance 1e-9.
EpsCoverage verify_eps_approx(const FiniteUtilitySet& s,
                              const FiniteUtilitySet& u, double eps);

/**
 * Build a small subset of U covering it up to factor (1 + eps):
 * Pareto-filter first, then bucket the front into log-space cells of side
 * log(1 + eps) and keep one maximal representative per occupied cell.
 * Requires strictly positive coordinates and eps >= 0; eps = 0 returns
 * the full front. Output size never exceeds the front size.
 */
FiniteUtilitySet eps_approx_construct(const FiniteUtilitySet& u, double eps);

/// Both sides of the coverage/expansion equivalence, evaluated
/// independently: `definitional` checks the factor-(1+eps) coverage of U
/// by S; `expansion_form` checks that the front of U lies inside S
/// multiplicatively expanded by exp(eps). The two agree at corresponding
/// thresholds (1+eps vs exp(eps)) only up to first order; both are
/// reported, never conflated.
struct EpsTheoremCheck {
  bool definitional;
  bool expansion_form;
};

EpsTheoremCheck check_eps_expansion_theorem(const FiniteUtilitySet& s,
                                            const FiniteUtilitySet& u,
                                            double eps);

}  // namespace pgauge

#endif  // PGAUGE_PARETO_HPP
