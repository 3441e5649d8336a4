#ifndef PGAUGE_INEFFICIENCY_HPP
#define PGAUGE_INEFFICIENCY_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pgauge/indexes.hpp"
#include "pgauge/point.hpp"
#include "pgauge/policies.hpp"
#include "pgauge/sets.hpp"

namespace pgauge {

/**
 * Price-of-anarchy style ratio: max over u in U of f(u) / f(beta).
 * beta must belong to U within tolerance (so the value is always >= 1).
 * Points where f is undefined are skipped as candidates; f(beta) == 0 is
 * an error (undefined ratio).
 */
double poa_instance(const IndexSpec& f, const UtilityPoint& beta,
                    const FiniteUtilitySet& u);

/// Closed form of the sum-inefficiency of the proportionally fair
/// (product-optimal) point on S_{M,N}: M N / (M + N - 1). Grows to N as
/// M grows.
double poa_smn_nbs(const SmnFamily& family);

/// Closed form of the sum-inefficiency of the max-min fair point on
/// S_{M,N}: (M (N - 1) + 1) / N. Grows without bound in M.
double poa_smn_maxmin(const SmnFamily& family);

/// Selfish degradation factor: max over u in U of min_k u_k / beta_k.
/// beta must be strictly positive; candidates may have zero coordinates
/// (their min-ratio is simply 0).
double sdf_instance(const UtilityPoint& beta, const FiniteUtilitySet& u);

/// Both sides of the degradation lemma, evaluated independently:
///   left:  log(sdf_instance(beta, U)) <= eps
///   right: every u in U has some coordinate with
///          log(u_k) <= log(beta_k) + eps   (log 0 = -inf)
/// The two sides are equivalent; returning both keeps the check honest.
std::pair<bool, bool> sdf_lemma_check(const UtilityPoint& beta,
                                      const FiniteUtilitySet& u, double eps);

/// Multiplicative distance from beta to the Pareto front of U, in two
/// independently computed forms (exponential of the L-infinity log-space
/// distance / direct min-max coordinate ratio).
struct TopoForms {
  double from_logs;
  double from_ratios;
};

TopoForms topo_instance_forms(const UtilityPoint& beta,
                              const FiniteUtilitySet& u);

/// The distance above as a single value (the ratio form). The two forms
/// are required to agree within 1e-9; a disagreement is a logic error.
/// beta must belong to U and be strictly positive. Members of U with a
/// zero coordinate sit at infinite multiplicative distance and never
/// witness the minimum. Equals 1 exactly when beta is on the front.
double topo_instance(const UtilityPoint& beta, const FiniteUtilitySet& u);

/// True iff beta lies within the front of U expanded multiplicatively by
/// exp(eps). Equivalent to topo_instance(beta, U) <= exp(eps).
bool topo_expansion_check(const UtilityPoint& beta, const FiniteUtilitySet& u,
                          double eps);

/// One measured point of a family sweep.
struct SweepRow {
  double M;
  int N;
  std::string policy;
  double value;
};

enum class SweepMeasure { Poa, Sdf, Topo };

/// Either a closed-form optimizer label or a full policy to apply to the
/// discretized set.
using SweepPolicy = std::variant<SmnObjective, PolicySpec>;

/**
 * Evaluate one inefficiency measure across S_{M,N} instances. For each M
 * the utility set is the resolution-grid discretization of S_{M,N}
 * augmented with the three closed-form optimizers (so the relevant
 * extreme points are present exactly). Rows come back sorted by M.
 * Errors from constituent measures (e.g. a zero-coordinate beta for the
 * Sdf measure) propagate.
 */
std::vector<SweepRow> sweep_family(const SweepPolicy& policy,
                                   SweepMeasure measure, const IndexSpec& f,
                                   std::vector<double> ms, int n,
                                   int resolution);

/// Everything the three measures say about one (beta, U) instance.
struct InefficiencyReport {
  UtilityPoint beta_point;
  std::optional<IndexSpec> f_used;
  std::optional<double> poa;
  double sdf;
  double topo;
  std::optional<UtilityPoint> poa_witness;
  UtilityPoint sdf_witness;
  UtilityPoint topo_witness;
  std::vector<std::string> notes;
};

/// Compute all applicable measures for beta against U. beta must belong
/// to U and both must be strictly positive (sdf and topo require it).
/// The poa entry is present only when f is given.
InefficiencyReport make_report(const UtilityPoint& beta,
                               const FiniteUtilitySet& u,
                               const std::optional<IndexSpec>& f);

}  // namespace pgauge

#endif  // PGAUGE_INEFFICIENCY_HPP
