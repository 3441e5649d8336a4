#include "pgauge/inefficiency.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pgauge/pareto.hpp"

namespace pgauge {

namespace {

void require_member(const UtilityPoint& beta, const FiniteUtilitySet& u,
                    const char* what) {
  if (!u.contains(beta)) {
    throw std::invalid_argument(std::string(what) + ": beta " +
                                beta.to_string() +
                                " is not a member of the utility set");
  }
}

void require_positive(const UtilityPoint& p, const char* what) {
  if (!p.all_positive()) {
    throw std::domain_error(std::string(what) +
                            ": needs strictly positive coordinates, got " +
                            p.to_string());
  }
}

double min_ratio(const UtilityPoint& u, const UtilityPoint& beta) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < u.dim(); ++k) {
    worst = std::min(worst, u[k] / beta[k]);
  }
  return worst;
}

}  // namespace

double poa_instance(const IndexSpec& f, const UtilityPoint& beta,
                    const FiniteUtilitySet& u) {
  require_member(beta, u, "poa_instance");
  if (!f.domain_ok(beta)) {
    throw std::domain_error("poa_instance: " + f.name() +
                            " undefined at beta " + beta.to_string());
  }
  const double denom = eval_index(f, beta);
  if (denom == 0.0) {
    throw std::domain_error("poa_instance: index value at beta is zero, "
                            "ratio undefined");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : u.points()) {
    if (!f.domain_ok(p)) continue;  // not a candidate for the supremum
    best = std::max(best, eval_index(f, p) / denom);
  }
  return best;
}

double poa_smn_nbs(const SmnFamily& family) {
  const double m = family.M();
  const double n = family.N();
  return m * n / (m + n - 1.0);
}

double poa_smn_maxmin(const SmnFamily& family) {
  const double m = family.M();
  const double n = family.N();
  return (m * (n - 1.0) + 1.0) / n;
}

double sdf_instance(const UtilityPoint& beta, const FiniteUtilitySet& u) {
  require_positive(beta, "sdf_instance");
  if (beta.dim() != u.dim()) {
    throw std::invalid_argument("sdf_instance: dimension mismatch");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : u.points()) {
    best = std::max(best, min_ratio(p, beta));
  }
  return best;
}

std::pair<bool, bool> sdf_lemma_check(const UtilityPoint& beta,
                                      const FiniteUtilitySet& u, double eps) {
  const bool left = std::log(sdf_instance(beta, u)) <= eps;

  // Right side from scratch: every point must have some coordinate that
  // stays within exp(eps) of beta's, compared in log space. log 0 is
  // treated as -inf, so zero coordinates satisfy the bound trivially.
  bool right = true;
  for (const auto& p : u.points()) {
    bool some_coord_below = false;
    for (std::size_t k = 0; k < p.dim() && !some_coord_below; ++k) {
      some_coord_below =
          p[k] == 0.0 || std::log(p[k]) <= std::log(beta[k]) + eps;
    }
    if (!some_coord_below) {
      right = false;
      break;
    }
  }
  return {left, right};
}

TopoForms topo_instance_forms(const UtilityPoint& beta,
                              const FiniteUtilitySet& u) {
  require_member(beta, u, "topo_instance");
  require_positive(beta, "topo_instance");

  const FiniteUtilitySet front = pareto_filter(u).points;

  // Frontier points with a zero coordinate sit at infinite multiplicative
  // distance from any positive point, so they can never witness the
  // minimum; skipping them keeps both routes log-safe. A positive member
  // guarantees a positive frontier point above it, so the guard below is
  // purely defensive.
  double log_route = std::numeric_limits<double>::infinity();
  double ratio_route = std::numeric_limits<double>::infinity();
  for (const auto& p : front.points()) {
    if (!p.all_positive()) continue;
    double worst_log = 0.0;
    double worst_ratio = 0.0;
    for (std::size_t k = 0; k < p.dim(); ++k) {
      worst_log = std::max(worst_log,
                           std::abs(std::log(beta[k]) - std::log(p[k])));
      worst_ratio =
          std::max({worst_ratio, beta[k] / p[k], p[k] / beta[k]});
    }
    log_route = std::min(log_route, worst_log);
    ratio_route = std::min(ratio_route, worst_ratio);
  }
  if (!std::isfinite(ratio_route)) {
    throw std::domain_error("topo_instance: no positive frontier point");
  }
  return {std::exp(log_route), ratio_route};
}

double topo_instance(const UtilityPoint& beta, const FiniteUtilitySet& u) {
  const TopoForms forms = topo_instance_forms(beta, u);
  if (std::abs(forms.from_logs - forms.from_ratios) > 1e-9) {
    throw std::logic_error(
        "topo_instance: log-space and ratio evaluations disagree");
  }
  return forms.from_ratios;
}

bool topo_expansion_check(const UtilityPoint& beta, const FiniteUtilitySet& u,
                          double eps) {
  require_member(beta, u, "topo_expansion_check");
  require_positive(beta, "topo_expansion_check");
  const FiniteUtilitySet front = pareto_filter(u).points;
  std::vector<UtilityPoint> positive;
  for (const auto& p : front.points()) {
    if (p.all_positive()) positive.push_back(p);
  }
  if (positive.empty()) {
    throw std::domain_error("topo_expansion_check: no positive frontier point");
  }
  const Expansion around_front = Expansion::multiplicative(
      FiniteUtilitySet(std::move(positive)), std::exp(eps), Metric::LInf);
  return expand_contains(around_front, beta);
}

std::vector<SweepRow> sweep_family(const SweepPolicy& policy,
                                   SweepMeasure measure, const IndexSpec& f,
                                   std::vector<double> ms, int n,
                                   int resolution) {
  if (ms.empty()) throw std::invalid_argument("sweep_family: no M values");
  std::sort(ms.begin(), ms.end());

  std::vector<SweepRow> rows;
  rows.reserve(ms.size());
  for (double m : ms) {
    const SmnFamily family(m, n);
    std::vector<UtilityPoint> points =
        discretize(smn_halfspaces(family), resolution).points();
    for (SmnObjective o :
         {SmnObjective::Sum, SmnObjective::Min, SmnObjective::Product}) {
      points.push_back(smn_closed_form(o, family));
    }
    const FiniteUtilitySet set(std::move(points));

    UtilityPoint beta =
        std::holds_alternative<SmnObjective>(policy)
            ? smn_closed_form(std::get<SmnObjective>(policy), family)
            : apply_policy(std::get<PolicySpec>(policy), set);
    std::string label =
        std::holds_alternative<SmnObjective>(policy)
            ? std::array{"sum", "min", "product"}[static_cast<int>(
                  std::get<SmnObjective>(policy))]
            : std::get<PolicySpec>(policy).label();

    double value = 0.0;
    switch (measure) {
      case SweepMeasure::Poa:
        value = poa_instance(f, beta, set);
        break;
      case SweepMeasure::Sdf:
        value = sdf_instance(beta, set);
        break;
      case SweepMeasure::Topo:
        value = topo_instance(beta, set);
        break;
    }
    rows.push_back({m, n, std::move(label), value});
  }
  return rows;
}

InefficiencyReport make_report(const UtilityPoint& beta,
                               const FiniteUtilitySet& u,
                               const std::optional<IndexSpec>& f) {
  require_member(beta, u, "make_report");
  require_positive(beta, "make_report");
  for (const auto& p : u.points()) require_positive(p, "make_report");

  InefficiencyReport report{
      beta, f, std::nullopt, 0.0, 0.0, std::nullopt, beta, beta, {}};

  if (f) {
    report.poa = poa_instance(*f, beta, u);
    const double denom = eval_index(*f, beta);
    for (const auto& p : u.points()) {
      if (f->domain_ok(p) && eval_index(*f, p) / denom == *report.poa) {
        report.poa_witness = p;
        break;
      }
    }
  }

  report.sdf = sdf_instance(beta, u);
  for (const auto& p : u.points()) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < p.dim(); ++k) {
      worst = std::min(worst, p[k] / beta[k]);
    }
    if (worst == report.sdf) {
      report.sdf_witness = p;
      break;
    }
  }

  report.topo = topo_instance(beta, u);
  const FiniteUtilitySet front = pareto_filter(u).points;
  for (const auto& p : front.points()) {
    double worst = 0.0;
    for (std::size_t k = 0; k < p.dim(); ++k) {
      worst = std::max({worst, beta[k] / p[k], p[k] / beta[k]});
    }
    if (worst == report.topo) {
      report.topo_witness = p;
      break;
    }
  }
  return report;
}

}  // namespace pgauge
