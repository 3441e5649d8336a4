#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pgauge/demos.hpp"

using namespace pgauge;
using demos::DemoReport;

namespace {

double summary_value(const DemoReport& r, const std::string& column) {
  const auto it = r.artifacts.find("summary");
  REQUIRE(it != r.artifacts.end());
  const auto& t = it->second;
  REQUIRE(t.rows.size() == 1);
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == column) return t.rows[0][i];
  }
  FAIL("summary has no column ", column);
  return 0.0;
}

}  // namespace

TEST_CASE("every registered counterexample reproduces out of the box") {
  const auto reg = demos::registry();
  const std::vector<std::string> expected = {
      "sum-discontinuity",       "policy-jump-geometric-opt",
      "policy-jump-arithmetic-opt", "convex-nonmonotone",
      "jain-maxmin-flaw",        "jain-nonpareto",
      "braess-jain"};
  REQUIRE(reg.size() == expected.size());
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reg[i].first == expected[i]);
    const DemoReport r = reg[i].second();
    CHECK_MESSAGE(r.passed, r.name, ": ", r.narrative);
    CHECK(r.name == expected[i]);
    CHECK_FALSE(r.narrative.empty());
    CHECK_FALSE(r.artifacts.empty());
  }
}

TEST_CASE("tiny constraint wiggles flip the sum-optimal vertex") {
  const DemoReport r = demos::sum_discontinuity(0.01);
  CHECK(r.passed);
  CHECK(summary_value(r, "jump_linf") >= 0.9);
  CHECK(summary_value(r, "hausdorff") <= 0.03);
  // the two picks sit on opposite axes
  CHECK(summary_value(r, "below_x") < 0.2);
  CHECK(summary_value(r, "above_x") > 0.8);

  CHECK_THROWS_AS(demos::sum_discontinuity(0.0), std::invalid_argument);
  CHECK_THROWS_AS(demos::sum_discontinuity(0.2), std::invalid_argument);
}

TEST_CASE("policy picks jump although the sets move continuously") {
  SUBCASE("product optimizer switches near the ratio boundary") {
    const DemoReport r = demos::pareto_policy_jump(
        PolicySpec::index_opt(IndexSpec::geometric()));
    CHECK(r.passed);
    CHECK(summary_value(r, "max_jump") >= 0.4);
    CHECK(summary_value(r, "max_set_gap") <= 0.8 / 100 + 1e-12);
    CHECK(std::abs(summary_value(r, "crossing_t") - 0.75) <= 0.006);
  }

  SUBCASE("sum optimizer switches where the sums tie") {
    const DemoReport r = demos::pareto_policy_jump(
        PolicySpec::index_opt(IndexSpec::arithmetic()));
    CHECK(r.passed);
    CHECK(std::abs(summary_value(r, "crossing_t") - 1.0) <= 0.006);
  }

  SUBCASE("a never-switching policy cannot exhibit the jump") {
    const DemoReport r = demos::pareto_policy_jump(
        PolicySpec::fixed(UtilityPoint{0.5, 1.5}));
    CHECK_FALSE(r.passed);
  }
}

TEST_CASE("no catalog policy improves on both segment endpoints") {
  const DemoReport r = demos::convex_nonmonotone();
  CHECK(r.passed);
  const auto it = r.artifacts.find("picks");
  REQUIRE(it != r.artifacts.end());
  for (const auto& row : it->second.rows) {
    CHECK(row.back() == 0.0);  // improves_both stays false throughout
  }
}

TEST_CASE("fairness-optimal and max-min fair points genuinely differ") {
  const DemoReport r = demos::jain_maxmin_flaw();
  CHECK(r.passed);
  CHECK(summary_value(r, "fair_y") == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(summary_value(r, "jain_at_fair") < summary_value(r, "best_jain"));

  // with the cap lifted the two notions coincide: control case
  const DemoReport control = demos::jain_maxmin_flaw(1.0);
  CHECK_FALSE(control.passed);
}

TEST_CASE("fairness optimization can discard a dominant outcome") {
  const DemoReport r = demos::jain_nonpareto();
  CHECK(r.passed);
  CHECK(summary_value(r, "jain_modest") == 1.0);
  CHECK(summary_value(r, "jain_better") == 0.9);
  CHECK(summary_value(r, "picked_modest") == 1.0);
  CHECK(summary_value(r, "pick_dominated") == 1.0);
}

TEST_CASE("growing the feasible set hurts everyone under the flawed policy") {
  const DemoReport r = demos::braess_jain();
  CHECK(r.passed);
  const auto it = r.artifacts.find("witness");
  REQUIRE(it != r.artifacts.end());
  REQUIRE(it->second.rows.size() == 1);
  const auto& row = it->second.rows[0];
  // columns: a1_x, a1_y, a2_x, a2_y
  CHECK(row[0] == 2.0);
  CHECK(row[1] == 2.0);
  CHECK(row[2] == 1.0);
  CHECK(row[3] == 1.0);
}
