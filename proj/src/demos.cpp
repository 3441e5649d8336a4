#include "pgauge/demos.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pgauge/indexes.hpp"
#include "pgauge/pareto.hpp"
#include "pgauge/sets.hpp"

namespace pgauge::demos {

DemoReport sum_discontinuity(double theta, int resolution) {
  const double t = std::abs(theta);
  if (!(t > 0.0) || t > 0.1) {
    throw std::invalid_argument(
        "sum_discontinuity needs 0 < |theta| <= 0.1");
  }

  auto tilted = [](double slope) {
    return HalfspaceSet(2, {{{1.0, slope}, 1.0}});
  };
  const FiniteUtilitySet below = discretize(tilted(1.0 - t), resolution);
  const FiniteUtilitySet above = discretize(tilted(1.0 + t), resolution);

  const PolicySpec sum_opt = PolicySpec::index_opt(IndexSpec::arithmetic());
  const UtilityPoint pick_below = apply_policy(sum_opt, below);
  const UtilityPoint pick_above = apply_policy(sum_opt, above);

  const double jump = distance(pick_below, pick_above, Metric::LInf);
  const double set_gap = hausdorff(below, above, Metric::LInf);
  const bool passed = jump >= 0.9 && set_gap <= 3.0 * t;

  std::ostringstream story;
  story << "Tilting the budget line x + (1 +- " << t
        << ") y <= 1 moves the feasible set by only " << set_gap
        << " (Hausdorff), yet the sum-optimal allocation jumps by " << jump
        << ": from " << pick_below.to_string() << " to "
        << pick_above.to_string()
        << ". Maximizing a continuous index is not a continuous selection.";

  DemoReport report;
  report.name = "sum-discontinuity";
  report.passed = passed;
  report.narrative = story.str();
  report.artifacts["summary"] =
      Table{{"theta", "jump_linf", "hausdorff", "below_x", "below_y",
             "above_x", "above_y"},
            {{t, jump, set_gap, pick_below[0], pick_below[1], pick_above[0],
              pick_above[1]}}};
  return report;
}

DemoReport pareto_policy_jump(const PolicySpec& policy, int steps) {
  if (steps < 2) {
    throw std::invalid_argument("pareto_policy_jump needs steps >= 2");
  }
  const UtilityPoint fixed_b{0.5, 1.5};
  const double t_high = 1.4;
  const double t_low = 0.6;
  const double step = (t_high - t_low) / steps;

  Table path{{"t", "chosen_x", "chosen_y"}, {}};
  bool pareto_ok = true;
  double max_jump = 0.0;
  double max_set_gap = 0.0;
  double crossing_t = std::numeric_limits<double>::quiet_NaN();

  std::optional<UtilityPoint> previous;
  double previous_t = t_high;
  for (int i = 0; i <= steps; ++i) {
    const double t = t_high - i * step;
    const UtilityPoint moving{1.0, t};
    const FiniteUtilitySet u_t({moving, fixed_b});
    const UtilityPoint chosen = apply_policy(policy, u_t);

    const UtilityPoint& other = chosen == moving ? fixed_b : moving;
    pareto_ok = pareto_ok && !pareto_less(chosen, other);

    path.rows.push_back({t, chosen[0], chosen[1]});
    if (previous) {
      const double jump = distance(*previous, chosen, Metric::LInf);
      if (jump > max_jump) {
        max_jump = jump;
        crossing_t = (previous_t + t) / 2.0;
      }
      const FiniteUtilitySet u_prev({UtilityPoint{1.0, previous_t}, fixed_b});
      max_set_gap = std::max(max_set_gap, hausdorff(u_prev, u_t));
    }
    previous = chosen;
    previous_t = t;
  }

  const bool passed =
      pareto_ok && max_jump >= 0.4 && max_set_gap <= 0.8 / steps + 1e-12;

  std::ostringstream story;
  story << "Sliding one point of a two-point set from (1, " << t_high
        << ") down to (1, " << t_low << ") in steps of " << step << ", the "
        << policy.label() << " selection ";
  if (max_jump >= 0.4) {
    story << "jumps by " << max_jump << " near t = " << crossing_t
          << " although consecutive sets stay within " << max_set_gap
          << " of each other.";
  } else {
    story << "never jumps (largest move " << max_jump
          << "); no switch between the two candidates was observed.";
  }
  if (!pareto_ok) story << " The selection was dominated at some step.";

  DemoReport report;
  report.name = "policy-jump-" + policy.label();
  report.passed = passed;
  report.narrative = story.str();
  report.artifacts["path"] = std::move(path);
  report.artifacts["summary"] =
      Table{{"max_jump", "max_set_gap", "crossing_t"},
            {{max_jump, max_set_gap, crossing_t}}};
  return report;
}

DemoReport convex_nonmonotone() {
  const UtilityPoint left{0.0, 1.0};
  const UtilityPoint right{1.0, 0.0};
  std::vector<UtilityPoint> segment;
  segment.reserve(101);
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    segment.push_back(UtilityPoint{x, 1.0 - x});
  }
  const FiniteUtilitySet u3(std::move(segment));

  Table picks{{"policy_id", "x", "y", "improves_both"}, {}};
  bool passed = true;
  std::ostringstream story;
  story << "Opening up the whole segment between (0,1) and (1,0) never "
           "yields a point improving on both endpoints at once:";

  const auto catalog = policy_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const UtilityPoint pick = apply_policy(catalog[i], u3);
    const bool improves_both = dominates(left, pick) && dominates(right, pick);
    passed = passed && !improves_both;
    picks.rows.push_back({static_cast<double>(i), pick[0], pick[1],
                          improves_both ? 1.0 : 0.0});
    story << ' ' << catalog[i].label() << " picks " << pick.to_string() << ';';
  }
  story << " none improves on both endpoints.";

  DemoReport report;
  report.name = "convex-nonmonotone";
  report.passed = passed;
  report.narrative = story.str();
  report.artifacts["picks"] = std::move(picks);
  return report;
}

DemoReport jain_maxmin_flaw(double y_cap, int resolution) {
  if (!(y_cap > 0.0) || y_cap > 1.0) {
    throw std::invalid_argument("jain_maxmin_flaw needs 0 < y_cap <= 1");
  }
  const HalfspaceSet region(2, {{{0.0, 1.0}, y_cap}, {{1.0, 1.0}, 2.0}});
  const FiniteUtilitySet grid = discretize(region, resolution);

  const UtilityPoint fair = apply_policy(PolicySpec::maxmin_fair(), grid);
  const double jain_at_fair = eval_index(IndexSpec::jain(), fair);

  double best_jain = 0.0;
  for (const auto& p : grid.points()) {
    best_jain = std::max(best_jain, eval_index(IndexSpec::jain(), p));
  }

  const bool flawed = jain_at_fair < best_jain - 1e-12;

  std::ostringstream story;
  story << "With one player capped at " << y_cap
        << " and a shared budget of 2, the max-min fair allocation is "
        << fair.to_string() << " with Jain index " << jain_at_fair
        << " while " << best_jain
        << " is achievable: proportion-style fairness scores punish an "
           "allocation no max-min-fair objective can improve."
        << (flawed ? "" : " (Here the two coincide: control case.)");

  DemoReport report;
  report.name = "jain-maxmin-flaw";
  report.passed = flawed;
  report.narrative = story.str();
  report.artifacts["summary"] =
      Table{{"y_cap", "fair_x", "fair_y", "jain_at_fair", "best_jain"},
            {{y_cap, fair[0], fair[1], jain_at_fair, best_jain}}};
  return report;
}

DemoReport jain_nonpareto() {
  const UtilityPoint modest{1.0, 1.0};
  const UtilityPoint better{2.0, 1.0};
  const FiniteUtilitySet u({modest, better});

  const UtilityPoint pick =
      apply_policy(PolicySpec::index_opt(IndexSpec::jain()), u);
  const bool picked_modest = pick == modest;
  const bool pick_dominated = !is_pareto_optimal(pick, u);

  DemoReport report;
  report.name = "jain-nonpareto";
  report.passed = picked_modest && pick_dominated;

  std::ostringstream story;
  story << "Between (1,1) and (2,1) the Jain index prefers " << pick.to_string()
        << " (scores 1 vs 0.9), discarding a free gain for the first "
           "player: a fairness-only index need not select maximal points.";
  report.narrative = story.str();
  report.artifacts["summary"] = Table{
      {"jain_modest", "jain_better", "picked_modest", "pick_dominated"},
      {{eval_index(IndexSpec::jain(), modest),
        eval_index(IndexSpec::jain(), better), picked_modest ? 1.0 : 0.0,
        pick_dominated ? 1.0 : 0.0}}};
  return report;
}

DemoReport braess_jain() {
  const FiniteUtilitySet small({UtilityPoint{2.0, 2.0}});
  const FiniteUtilitySet large({UtilityPoint{1.0, 1.0}, UtilityPoint{2.0, 2.0}});
  const PolicySpec jain_lexmin =
      PolicySpec::index_opt(IndexSpec::jain(), TieBreak::LexMin);

  const auto witness = braess_detect(jain_lexmin, small, large);

  DemoReport report;
  report.name = "braess-jain";
  report.passed = witness.has_value();

  std::ostringstream story;
  if (witness) {
    story << "Adding the option (1,1) to {(2,2)} moves the Jain-optimal "
             "(LexMin tie-break) choice from "
          << witness->a1.to_string() << " to " << witness->a2.to_string()
          << ": both players lose when the set grows. Both points score a "
             "perfect Jain index, and the tie-break walks down.";
    report.artifacts["witness"] =
        Table{{"a1_x", "a1_y", "a2_x", "a2_y"},
              {{witness->a1[0], witness->a1[1], witness->a2[0],
                witness->a2[1]}}};
  } else {
    story << "No anomaly: growing the set did not hurt the selection.";
  }
  report.narrative = story.str();
  return report;
}

std::vector<std::pair<std::string, std::function<DemoReport()>>> registry() {
  return {
      {"sum-discontinuity", [] { return sum_discontinuity(0.01, 101); }},
      {"policy-jump-geometric-opt",
       [] {
         return pareto_policy_jump(
             PolicySpec::index_opt(IndexSpec::geometric()), 100);
       }},
      {"policy-jump-arithmetic-opt",
       [] {
         return pareto_policy_jump(
             PolicySpec::index_opt(IndexSpec::arithmetic()), 100);
       }},
      {"convex-nonmonotone", [] { return convex_nonmonotone(); }},
      {"jain-maxmin-flaw", [] { return jain_maxmin_flaw(0.5, 201); }},
      {"jain-nonpareto", [] { return jain_nonpareto(); }},
      {"braess-jain", [] { return braess_jain(); }},
  };
}

}  // namespace pgauge::demos
