#include "pgauge/policies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "pgauge/random.hpp"

namespace pgauge {

namespace {

// True when `candidate` should replace `incumbent` under the tie rule.
bool tie_prefers(TieBreak tiebreak, const UtilityPoint& candidate,
                 const UtilityPoint& incumbent) {
  return tiebreak == TieBreak::LexMax
             ? lex_less(incumbent.coords(), candidate.coords())
             : lex_less(candidate.coords(), incumbent.coords());
}

std::vector<double> sorted_ascending(const UtilityPoint& p) {
  std::vector<double> s(p.coords());
  std::sort(s.begin(), s.end());
  return s;
}

void require_nested(const FiniteUtilitySet& small,
                    const FiniteUtilitySet& large, const char* what) {
  for (const auto& p : small.points()) {
    if (!large.contains(p)) {
      throw std::invalid_argument(std::string(what) + ": " + p.to_string() +
                                  " missing from the enclosing set");
    }
  }
}

}  // namespace

PolicySpec::PolicySpec(Kind kind, std::optional<IndexSpec> index,
                       TieBreak tiebreak, std::optional<UtilityPoint> point)
    : kind_(kind),
      index_(std::move(index)),
      tiebreak_(tiebreak),
      point_(std::move(point)) {}

PolicySpec PolicySpec::index_opt(IndexSpec index, TieBreak tiebreak) {
  return {Kind::IndexOpt, std::move(index), tiebreak, std::nullopt};
}

PolicySpec PolicySpec::maxmin_fair(TieBreak tiebreak) {
  return {Kind::MaxMinFair, std::nullopt, tiebreak, std::nullopt};
}

PolicySpec PolicySpec::fixed(UtilityPoint point) {
  return {Kind::Fixed, std::nullopt, TieBreak::LexMax, std::move(point)};
}

const IndexSpec& PolicySpec::index() const {
  if (!index_) throw std::logic_error("policy carries no index");
  return *index_;
}

const UtilityPoint& PolicySpec::fixed_point() const {
  if (!point_) throw std::logic_error("policy carries no fixed point");
  return *point_;
}

std::string PolicySpec::label() const {
  switch (kind_) {
    case Kind::MaxMinFair:
      return "maxmin-fair";
    case Kind::Fixed:
      return "fixed" + point_->to_string();
    case Kind::IndexOpt:
      return index_->name() + "-opt";
  }
  return "unknown";
}

UtilityPoint apply_policy(const PolicySpec& policy,
                          const FiniteUtilitySet& set) {
  switch (policy.kind()) {
    case PolicySpec::Kind::Fixed: {
      if (!set.contains(policy.fixed_point())) {
        throw std::invalid_argument("fixed policy point " +
                                    policy.fixed_point().to_string() +
                                    " is not a member of the set");
      }
      return policy.fixed_point();
    }
    case PolicySpec::Kind::MaxMinFair: {
      const UtilityPoint* best = nullptr;
      std::vector<double> best_key;
      for (const auto& p : set.points()) {
        auto key = sorted_ascending(p);
        if (best == nullptr || lex_less(best_key, key) ||
            (key == best_key && tie_prefers(policy.tiebreak(), p, *best))) {
          best = &p;
          best_key = std::move(key);
        }
      }
      return *best;
    }
    case PolicySpec::Kind::IndexOpt: {
      const IndexSpec& f = policy.index();
      const UtilityPoint* best = nullptr;
      double best_value = 0.0;
      for (const auto& p : set.points()) {
        if (!f.domain_ok(p)) continue;
        const double value = eval_index(f, p);
        if (best == nullptr || value > best_value ||
            (value == best_value &&
             tie_prefers(policy.tiebreak(), p, *best))) {
          best = &p;
          best_value = value;
        }
      }
      if (best == nullptr) {
        throw std::domain_error(
            "apply_policy: every point lies outside the domain of " +
            f.name());
      }
      return *best;
    }
  }
  throw std::logic_error("unhandled policy kind");
}

UtilityPoint smn_closed_form(SmnObjective objective,
                             const SmnFamily& family) {
  const double m = family.M();
  const auto n = static_cast<std::size_t>(family.N());
  std::vector<double> coords(n, 0.0);
  switch (objective) {
    case SmnObjective::Sum:
      coords[0] = m;
      break;
    case SmnObjective::Min: {
      const double share =
          1.0 / (static_cast<double>(n) - 1.0 + 1.0 / m);
      std::fill(coords.begin(), coords.end(), share);
      break;
    }
    case SmnObjective::Product: {
      coords[0] = m / static_cast<double>(n);
      for (std::size_t k = 1; k < n; ++k) {
        coords[k] = 1.0 / static_cast<double>(n);
      }
      break;
    }
  }
  return UtilityPoint(std::move(coords));
}

std::optional<BraessWitness> braess_detect(const PolicySpec& policy,
                                           const FiniteUtilitySet& u1,
                                           const FiniteUtilitySet& u2) {
  require_nested(u1, u2, "braess_detect");
  UtilityPoint a1 = apply_policy(policy, u1);
  UtilityPoint a2 = apply_policy(policy, u2);
  if (strictly_dominated_by_all_coords(a2, a1)) {
    return BraessWitness{u1, u2, std::move(a1), std::move(a2)};
  }
  return std::nullopt;
}

std::optional<FIncreasingViolation> check_f_increasing(
    const PolicySpec& policy, const IndexSpec& f,
    const std::vector<FiniteUtilitySet>& chain) {
  if (chain.size() < 2) {
    throw std::invalid_argument("check_f_increasing needs a chain of >= 2");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    require_nested(chain[i], chain[i + 1], "check_f_increasing");
  }
  constexpr double kMargin = 1e-9;
  double previous = eval_index(f, apply_policy(policy, chain.front()));
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const double current = eval_index(f, apply_policy(policy, chain[i]));
    if (previous > current + kMargin) {
      return FIncreasingViolation{i, previous, current};
    }
    previous = current;
  }
  return std::nullopt;
}

std::optional<CrossIndexWitness> find_cross_index_violation(
    const IndexSpec& f, const IndexSpec& g, std::size_t n, int trials,
    std::uint64_t seed) {
  constexpr double kMargin = 1e-6;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<double> a(n), b(n);
    for (auto& c : a) c = log_uniform(rng, 0.1, 10.0);
    for (auto& c : b) c = log_uniform(rng, 0.1, 10.0);
    UtilityPoint x(std::move(a));
    UtilityPoint y(std::move(b));
    // Try both role assignments for the drawn pair.
    for (int swap = 0; swap < 2; ++swap) {
      const UtilityPoint& x1 = swap ? y : x;
      const UtilityPoint& x2 = swap ? x : y;
      if (eval_index(f, x1) < eval_index(f, x2) - kMargin &&
          eval_index(g, x2) < eval_index(g, x1) - kMargin) {
        std::vector<FiniteUtilitySet> chain{
            FiniteUtilitySet({x2}), FiniteUtilitySet({x1, x2})};
        return CrossIndexWitness{x1, x2, std::move(chain)};
      }
    }
  }
  return std::nullopt;
}

std::vector<PolicySpec> policy_catalog() {
  return {
      PolicySpec::index_opt(IndexSpec::arithmetic()),
      PolicySpec::index_opt(IndexSpec::min()),
      PolicySpec::index_opt(IndexSpec::max()),
      PolicySpec::index_opt(IndexSpec::geometric()),
      PolicySpec::index_opt(IndexSpec::harmonic()),
      PolicySpec::index_opt(IndexSpec::jain()),
      PolicySpec::index_opt(IndexSpec::quasi_arithmetic(2.0)),
      PolicySpec::maxmin_fair(),
  };
}

}  // namespace pgauge
