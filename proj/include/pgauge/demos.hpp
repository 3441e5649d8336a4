#ifndef PGAUGE_DEMOS_HPP
#define PGAUGE_DEMOS_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pgauge/policies.hpp"

namespace pgauge::demos {

/// Small named numeric table, serializable to CSV for external plotting.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Outcome of one executable counterexample. `passed` is always computed
/// from the run, never assumed.
struct DemoReport {
  std::string name;
  bool passed = false;
  std::string narrative;
  std::map<std::string, Table> artifacts;
};

/**
 * Two almost identical constraint sets x + (1 +- theta) y <= 1 whose
 * sum-optimal allocations sit on opposite vertices: the sets are within
 * Hausdorff distance 3|theta| of each other, yet the chosen points are
 * at least 0.9 apart. Requires 0 < |theta| <= 0.1.
 */
DemoReport sum_discontinuity(double theta, int resolution = 101);

/**
 * A two-point family U_t = {(1, t), (0.5, 1.5)} with t sliding from 1.4
 * down to 0.6. Both points stay mutually incomparable, consecutive sets
 * are within 0.8/steps of each other, yet the policy's pick jumps by at
 * least 0.4 at some step. A policy that never switches (e.g. Fixed)
 * yields a failed report rather than an error.
 */
DemoReport pareto_policy_jump(const PolicySpec& policy, int steps = 100);

/// On the segment {(x, 1 - x)}, no policy's pick can improve on both
/// endpoints (0,1) and (1,0) at once: the usual convexity trick behind
/// scalarization does not give monotone behavior. Runs the whole
/// built-in policy catalog.
DemoReport convex_nonmonotone();

/**
 * Feasible region {y <= y_cap, x + y <= 2}: the max-min fair point is
 * (2 - y_cap, y_cap), whose Jain index stays below the best achievable
 * Jain value (1, at the equal split). With y_cap = 1 the two coincide
 * and the report comes back not-flawed (control case).
 */
DemoReport jain_maxmin_flaw(double y_cap = 0.5, int resolution = 201);

/// On {(1,1), (2,1)} the Jain-optimal point is (1,1), which (2,1)
/// improves on for free: Jain optimization can discard Pareto-dominant
/// outcomes.
DemoReport jain_nonpareto();

/// Growing {(2,2)} to {(1,1), (2,2)} makes the Jain policy with LexMin
/// tie-breaking strictly worse for every player. The LexMax tie-break
/// and sum optimization are immune (controls, exercised in tests).
DemoReport braess_jain();

/// The canonical demo set, in fixed order, with default parameters.
std::vector<std::pair<std::string, std::function<DemoReport()>>> registry();

}  // namespace pgauge::demos

#endif  // PGAUGE_DEMOS_HPP
