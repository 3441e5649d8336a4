#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "pgauge/point.hpp"
#include "pgauge/sets.hpp"

using namespace pgauge;

TEST_CASE("utility points validate their coordinates") {
  CHECK_NOTHROW(UtilityPoint{0.0, 1.5});
  CHECK_THROWS_AS(UtilityPoint(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS((UtilityPoint{1.0, -0.1}), std::invalid_argument);
  CHECK_THROWS_AS((UtilityPoint{1.0, std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(
      (UtilityPoint{1.0, std::numeric_limits<double>::infinity()}),
      std::invalid_argument);

  const UtilityPoint p{1.0, 2.0, 3.0};
  CHECK(p.dim() == 3);
  CHECK(p[1] == 2.0);
  CHECK(p.all_positive());
  CHECK_FALSE(p.is_zero());
  CHECK_FALSE(UtilityPoint{0.0, 1.0}.all_positive());
  CHECK(UtilityPoint{0.0, 0.0}.is_zero());
}

TEST_CASE("dominance relations on hand-picked points") {
  const UtilityPoint a{1.0, 2.0};
  const UtilityPoint b{2.0, 2.0};
  const UtilityPoint c{2.0, 3.0};

  CHECK(dominates(a, b));
  CHECK_FALSE(dominates(b, a));
  CHECK(dominates(a, a));

  CHECK(pareto_less(a, b));
  CHECK_FALSE(pareto_less(a, a));
  CHECK_FALSE(pareto_less(b, a));

  CHECK(strictly_dominated_by_all_coords(a, c));
  // one equal coordinate is enough to break the all-strict relation
  CHECK_FALSE(strictly_dominated_by_all_coords(a, b));

  // incomparable pair
  const UtilityPoint d{3.0, 1.0};
  CHECK_FALSE(dominates(a, d));
  CHECK_FALSE(dominates(d, a));

  CHECK_THROWS_AS(dominates(a, UtilityPoint{1.0, 2.0, 3.0}),
                  std::invalid_argument);
}

TEST_CASE("distances in all three metrics") {
  const UtilityPoint o{0.0, 0.0};
  const UtilityPoint p{3.0, 4.0};
  CHECK(distance(o, p, Metric::LInf) == 4.0);
  CHECK(distance(o, p, Metric::L2) == 5.0);
  CHECK(distance(o, p, Metric::L1) == 7.0);
  CHECK(distance(p, p) == 0.0);
}

TEST_CASE("lexicographic comparison") {
  CHECK(lex_less({1.0, 9.0}, {2.0, 0.0}));
  CHECK(lex_less({1.0, 1.0}, {1.0, 2.0}));
  CHECK_FALSE(lex_less({1.0, 2.0}, {1.0, 2.0}));
  CHECK_FALSE(lex_less({2.0, 0.0}, {1.0, 9.0}));
}

TEST_CASE("finite sets: construction, membership, equality as sets") {
  CHECK_THROWS_AS(FiniteUtilitySet(std::vector<UtilityPoint>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      FiniteUtilitySet({UtilityPoint{1.0}, UtilityPoint{1.0, 2.0}}),
      std::invalid_argument);

  const FiniteUtilitySet s({UtilityPoint{1.0, 2.0}, UtilityPoint{3.0, 4.0}});
  CHECK(s.size() == 2);
  CHECK(s.dim() == 2);
  CHECK(s.contains(UtilityPoint{1.0, 2.0}));
  CHECK(s.contains(UtilityPoint{1.0 + 5e-10, 2.0}));
  CHECK_FALSE(s.contains(UtilityPoint{1.0 + 1e-8, 2.0}));

  const FiniteUtilitySet t(
      {UtilityPoint{3.0, 4.0}, UtilityPoint{1.0, 2.0}, UtilityPoint{1.0, 2.0}});
  CHECK(s.same_points(t));
  CHECK(t.same_points(s));
  CHECK_FALSE(s.same_points(FiniteUtilitySet({UtilityPoint{1.0, 2.0}})));
}

TEST_CASE("halfspace sets reject unbounded and empty regions") {
  // x - y <= 1 caps nothing (mixed signs), so the region is unbounded
  CHECK_THROWS_WITH_AS(HalfspaceSet(2, {{{1.0, -1.0}, 1.0}}),
                       doctest::Contains("unbounded"), std::invalid_argument);
  // negative bound with nonnegative weights: nothing in the orthant
  CHECK_THROWS_WITH_AS(HalfspaceSet(2, {{{1.0, 1.0}, -1.0}}),
                       doctest::Contains("empty"), std::invalid_argument);
  // bounded box but contradictory band: probe finds nothing
  CHECK_THROWS_WITH_AS(HalfspaceSet(2, {{{1.0, 1.0}, 0.55},
                                        {{-1.0, -1.0}, -1.4},
                                        {{1.0, 0.0}, 0.3},
                                        {{0.0, 1.0}, 0.3}}),
                       doctest::Contains("probe"), std::invalid_argument);
  // weight vector of the wrong length
  CHECK_THROWS_AS(HalfspaceSet(2, {{{1.0}, 1.0}}), std::invalid_argument);
}

TEST_CASE("halfspace feasibility and bounding box") {
  const HalfspaceSet h(2, {{{1.0, 1.0}, 1.0}});
  CHECK(h.bounding_box() == std::vector<double>{1.0, 1.0});
  CHECK(h.feasible(UtilityPoint{0.5, 0.5}));
  CHECK(h.feasible(UtilityPoint{1.0, 0.0}));
  CHECK_FALSE(h.feasible(UtilityPoint{0.6, 0.6}));
  CHECK(h.feasible(std::vector<double>{0.25, 0.25}));
}

TEST_CASE("discretize produces the expected grid") {
  const HalfspaceSet h(2, {{{1.0, 1.0}, 1.0}});
  const FiniteUtilitySet grid = discretize(h, 3);
  const FiniteUtilitySet expected({UtilityPoint{0.0, 0.0},
                                   UtilityPoint{0.0, 0.5},
                                   UtilityPoint{0.0, 1.0},
                                   UtilityPoint{0.5, 0.0},
                                   UtilityPoint{0.5, 0.5},
                                   UtilityPoint{1.0, 0.0}});
  CHECK(grid.same_points(expected));
  CHECK_THROWS_AS(discretize(h, 1), std::invalid_argument);

  // a thin band whose corners are all infeasible at resolution 2
  const HalfspaceSet band(2, {{{1.0, 1.0}, 0.55},
                              {{-1.0, -1.0}, -0.4},
                              {{1.0, 0.0}, 0.3},
                              {{0.0, 1.0}, 0.3}});
  CHECK_THROWS_WITH_AS(discretize(band, 2), doctest::Contains("coarse"),
                       std::invalid_argument);
}

TEST_CASE("hausdorff distance on hand-picked sets") {
  const FiniteUtilitySet a({UtilityPoint{0.0, 0.0}, UtilityPoint{1.0, 0.0}});
  const FiniteUtilitySet b({UtilityPoint{0.0, 0.0}});
  CHECK(hausdorff(a, b) == 1.0);
  CHECK(hausdorff(b, a) == 1.0);
  CHECK(hausdorff(a, a) == 0.0);

  const FiniteUtilitySet c({UtilityPoint{3.0, 4.0}});
  CHECK(hausdorff(b, c, Metric::LInf) == 4.0);
  CHECK(hausdorff(b, c, Metric::L2) == 5.0);
  CHECK(hausdorff(b, c, Metric::L1) == 7.0);
}

TEST_CASE("scalable family: constraint shape and parameter checks") {
  CHECK_THROWS_AS(SmnFamily(0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(SmnFamily(-1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(SmnFamily(2.0, 1), std::invalid_argument);

  const SmnFamily fam(2.0, 3);
  const HalfspaceSet h = smn_halfspaces(fam);
  REQUIRE(h.constraints().size() == 1);
  CHECK(h.constraints()[0].weights == std::vector<double>{0.5, 1.0, 1.0});
  CHECK(h.constraints()[0].bound == 1.0);
  CHECK(h.feasible(UtilityPoint{2.0, 0.0, 0.0}));
  CHECK(h.feasible(UtilityPoint{0.4, 0.4, 0.4}));
  CHECK_FALSE(h.feasible(UtilityPoint{2.0, 0.1, 0.0}));
}

TEST_CASE("coordinatewise log map") {
  const FiniteUtilitySet s(
      {UtilityPoint{1.0, std::exp(1.0)}, UtilityPoint{2.0, 4.0}});
  const auto logs = log_map(s);
  REQUIRE(logs.size() == 2);
  CHECK(logs[0][0] == 0.0);
  CHECK(logs[0][1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(logs[1][0] == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(log_map(FiniteUtilitySet({UtilityPoint{0.0, 1.0}})),
                  std::domain_error);
}
