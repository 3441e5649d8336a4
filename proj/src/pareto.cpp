#include "pgauge/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace pgauge {

namespace {

bool improved_by_someone(const UtilityPoint& u, const FiniteUtilitySet& set) {
  return std::any_of(set.points().begin(), set.points().end(),
                     [&](const UtilityPoint& v) { return pareto_less(u, v); });
}

void require_subset(const FiniteUtilitySet& s, const FiniteUtilitySet& u,
                    const char* what) {
  for (const auto& p : s.points()) {
    if (!u.contains(p)) {
      throw std::invalid_argument(std::string(what) +
                                  ": point " + p.to_string() +
                                  " is not a member of the larger set");
    }
  }
}

std::vector<double> log_coords(const UtilityPoint& p) {
  std::vector<double> logs(p.dim());
  for (std::size_t k = 0; k < p.dim(); ++k) logs[k] = std::log(p[k]);
  return logs;
}

}  // namespace

ParetoFront pareto_filter(const FiniteUtilitySet& u) {
  std::vector<UtilityPoint> kept;
  for (const auto& p : u.points()) {
    if (improved_by_someone(p, u)) continue;
    if (std::find(kept.begin(), kept.end(), p) != kept.end()) continue;
    kept.push_back(p);
  }
  return {FiniteUtilitySet(std::move(kept)), u.size()};
}

bool is_pareto_optimal(const UtilityPoint& u, const FiniteUtilitySet& set) {
  if (!set.contains(u)) {
    throw std::invalid_argument("is_pareto_optimal: point " + u.to_string() +
                                " is not a member of the set");
  }
  return !improved_by_someone(u, set);
}

bool is_strictly_dominated(const UtilityPoint& u,
                           const FiniteUtilitySet& set) {
  return std::any_of(set.points().begin(), set.points().end(),
                     [&](const UtilityPoint& v) {
                       return strictly_dominated_by_all_coords(u, v);
                     });
}

Expansion Expansion::additive(FiniteUtilitySet base, double radius,
                              Metric metric) {
  if (!(radius >= 0.0)) {
    throw std::invalid_argument("additive expansion needs radius >= 0");
  }
  return {Form::Additive, std::move(base), radius, metric};
}

Expansion Expansion::multiplicative(FiniteUtilitySet base, double factor,
                                    Metric metric) {
  if (!(factor >= 1.0)) {
    throw std::invalid_argument("multiplicative expansion needs factor >= 1");
  }
  for (const auto& p : base.points()) {
    if (!p.all_positive()) {
      throw std::domain_error(
          "multiplicative expansion needs a strictly positive base, got " +
          p.to_string());
    }
  }
  return {Form::Multiplicative, std::move(base), factor, metric};
}

bool expand_contains(const Expansion& e, const UtilityPoint& p) {
  if (p.dim() != e.base().dim()) {
    throw std::invalid_argument("expand_contains: dimension mismatch");
  }
  if (e.form() == Expansion::Form::Additive) {
    for (const auto& b : e.base().points()) {
      if (distance(b, p, e.metric()) <= e.radius()) return true;
    }
    return false;
  }
  if (!p.all_positive()) {
    throw std::domain_error(
        "multiplicative expansion membership needs a positive point, got " +
        p.to_string());
  }
  const auto lp = log_coords(p);
  for (const auto& b : e.base().points()) {
    // Compare back in factor space: exp(log distance) against the factor.
    if (std::exp(distance(log_coords(b), lp, e.metric())) <= e.factor()) {
      return true;
    }
  }
  return false;
}

EpsCoverage verify_eps_approx(const FiniteUtilitySet& s,
                              const FiniteUtilitySet& u, double eps) {
  if (!(eps >= 0.0)) {
    throw std::invalid_argument("verify_eps_approx needs eps >= 0");
  }
  require_subset(s, u, "verify_eps_approx");
  for (const auto& p : u.points()) {
    bool covered = false;
    for (const auto& rep : s.points()) {
      bool ok = true;
      for (std::size_t k = 0; k < p.dim() && ok; ++k) {
        ok = p[k] <= (1.0 + eps) * rep[k];
      }
      if (ok) {
        covered = true;
        break;
      }
    }
    if (!covered) return {false, p};
  }
  return {true, std::nullopt};
}

FiniteUtilitySet eps_approx_construct(const FiniteUtilitySet& u, double eps) {
  if (!(eps >= 0.0)) {
    throw std::invalid_argument("eps_approx_construct needs eps >= 0");
  }
  for (const auto& p : u.points()) {
    if (!p.all_positive()) {
      throw std::domain_error(
          "eps_approx_construct needs strictly positive points, got " +
          p.to_string());
    }
  }
  ParetoFront front = pareto_filter(u);
  if (eps == 0.0) return front.points;

  // Log-space cells of side log(1+eps). Any point of a cell covers every
  // other point of the same cell up to factor (1+eps) per coordinate, so
  // one representative per occupied cell suffices; among the cell's
  // members keep the largest one (by log-volume, then lexicographically).
  const double cell = std::log1p(eps);
  std::map<std::vector<long long>, UtilityPoint> reps;
  for (const auto& p : front.points.points()) {
    std::vector<long long> key(p.dim());
    double log_volume = 0.0;
    for (std::size_t k = 0; k < p.dim(); ++k) {
      const double lc = std::log(p[k]);
      key[k] = static_cast<long long>(std::floor(lc / cell));
      log_volume += lc;
    }
    auto it = reps.find(key);
    if (it == reps.end()) {
      reps.emplace(std::move(key), p);
      continue;
    }
    double existing_volume = 0.0;
    for (double c : it->second.coords()) existing_volume += std::log(c);
    if (log_volume > existing_volume ||
        (log_volume == existing_volume &&
         lex_less(it->second.coords(), p.coords()))) {
      it->second = p;
    }
  }
  std::vector<UtilityPoint> out;
  out.reserve(reps.size());
  for (auto& [key, p] : reps) out.push_back(std::move(p));
  return FiniteUtilitySet(std::move(out));
}

EpsTheoremCheck check_eps_expansion_theorem(const FiniteUtilitySet& s,
                                            const FiniteUtilitySet& u,
                                            double eps) {
  for (const auto& p : u.points()) {
    if (!p.all_positive()) {
      throw std::domain_error(
          "check_eps_expansion_theorem needs strictly positive points");
    }
  }
  const bool definitional = verify_eps_approx(s, u, eps).covered;

  const Expansion around_s =
      Expansion::multiplicative(s, std::exp(eps), Metric::LInf);
  bool expansion_form = true;
  const ParetoFront front = pareto_filter(u);
  for (const auto& p : front.points.points()) {
    if (!expand_contains(around_s, p)) {
      expansion_form = false;
      break;
    }
  }
  return {definitional, expansion_form};
}

}  // namespace pgauge
