#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pgauge/pareto.hpp"

using namespace pgauge;

namespace {
FiniteUtilitySet make_set(std::vector<UtilityPoint> pts) {
  return FiniteUtilitySet(std::move(pts));
}
}  // namespace

TEST_CASE("filter keeps exactly the maximal points, in first-seen order") {
  const auto u = make_set({UtilityPoint{1.0, 1.0}, UtilityPoint{2.0, 1.0},
                           UtilityPoint{1.0, 2.0}, UtilityPoint{0.5, 0.5},
                           UtilityPoint{2.0, 1.0}});
  const ParetoFront front = pareto_filter(u);
  CHECK(front.source_size == 5);
  const std::vector<UtilityPoint> expect = {UtilityPoint{2.0, 1.0},
                                            UtilityPoint{1.0, 2.0}};
  CHECK(front.points.points() == expect);

  // filtering the front again changes nothing
  const ParetoFront again = pareto_filter(front.points);
  CHECK(again.points.points() == expect);
}

TEST_CASE("optimality queries distinguish weak and strict domination") {
  const auto u = make_set({UtilityPoint{1.0, 1.0}, UtilityPoint{2.0, 1.0},
                           UtilityPoint{1.0, 2.0}, UtilityPoint{0.5, 0.5}});
  CHECK(is_pareto_optimal(UtilityPoint{2.0, 1.0}, u));
  CHECK_FALSE(is_pareto_optimal(UtilityPoint{1.0, 1.0}, u));
  CHECK_THROWS_AS(is_pareto_optimal(UtilityPoint{5.0, 5.0}, u),
                  std::invalid_argument);

  // (1,1) is improved on, but never strictly in both coordinates at once
  CHECK_FALSE(is_strictly_dominated(UtilityPoint{1.0, 1.0}, u));
  CHECK(is_strictly_dominated(UtilityPoint{0.5, 0.5}, u));
  CHECK_FALSE(is_strictly_dominated(UtilityPoint{2.0, 1.0}, u));
}

TEST_CASE("expansion construction and membership") {
  const auto base = make_set({UtilityPoint{1.0, 1.0}});

  SUBCASE("additive ball, sup metric, inclusive boundary") {
    const Expansion e = Expansion::additive(base, 0.5);
    CHECK(expand_contains(e, UtilityPoint{1.5, 1.0}));
    CHECK(expand_contains(e, UtilityPoint{0.5, 1.5}));
    CHECK_FALSE(expand_contains(e, UtilityPoint{1.6, 1.0}));
    CHECK_THROWS_AS(expand_contains(e, UtilityPoint{1.0, 1.0, 1.0}),
                    std::invalid_argument);
  }

  SUBCASE("multiplicative ball is symmetric in the ratio") {
    const Expansion e = Expansion::multiplicative(base, 2.0);
    CHECK(expand_contains(e, UtilityPoint{1.9, 1.0}));
    CHECK(expand_contains(e, UtilityPoint{0.6, 1.0}));
    CHECK_FALSE(expand_contains(e, UtilityPoint{2.2, 1.0}));
    CHECK_FALSE(expand_contains(e, UtilityPoint{0.4, 1.0}));
    CHECK_THROWS_AS(expand_contains(e, UtilityPoint{0.0, 1.0}),
                    std::domain_error);
  }

  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(Expansion::additive(base, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(Expansion::multiplicative(base, 0.9),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        Expansion::multiplicative(make_set({UtilityPoint{0.0, 1.0}}), 2.0),
        std::domain_error);
  }
}

TEST_CASE("coverage check reports the first uncovered point") {
  const auto u = make_set({UtilityPoint{2.0, 2.0}, UtilityPoint{1.0, 5.0}});
  const auto s = make_set({UtilityPoint{2.0, 2.0}});
  const EpsCoverage c = verify_eps_approx(s, u, 1.0);
  CHECK_FALSE(c.covered);
  REQUIRE(c.uncovered.has_value());
  CHECK(*c.uncovered == UtilityPoint{1.0, 5.0});

  // with a big enough factor the same pair covers
  CHECK(verify_eps_approx(s, u, 1.5).covered);

  // the candidate set must live inside the covered set
  const auto outside = make_set({UtilityPoint{3.0, 3.0}});
  CHECK_THROWS_AS(verify_eps_approx(outside, u, 1.0), std::invalid_argument);
}

TEST_CASE("compressed cover: one representative per log cell") {
  const auto u = make_set({UtilityPoint{1.0, 4.0}, UtilityPoint{1.05, 3.9},
                           UtilityPoint{2.0, 2.0}, UtilityPoint{4.0, 1.0}});
  const FiniteUtilitySet s = eps_approx_construct(u, 0.1);
  // (1,4) and (1.05,3.9) share a cell; the larger log-volume point stays
  const std::vector<UtilityPoint> expect = {UtilityPoint{1.05, 3.9},
                                            UtilityPoint{2.0, 2.0},
                                            UtilityPoint{4.0, 1.0}};
  CHECK(s.points() == expect);
  CHECK(verify_eps_approx(s, u, 0.1).covered);

  SUBCASE("zero tolerance returns the whole front") {
    const FiniteUtilitySet full = eps_approx_construct(u, 0.0);
    CHECK(full.size() == 4);
    CHECK(full.same_points(pareto_filter(u).points));
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(eps_approx_construct(u, -0.01), std::invalid_argument);
    CHECK_THROWS_AS(
        eps_approx_construct(make_set({UtilityPoint{0.0, 1.0}}), 0.1),
        std::domain_error);
  }
}

TEST_CASE("the two coverage formulations are near but not identical") {
  SUBCASE("a constructed cover satisfies both") {
    const auto u = make_set({UtilityPoint{1.0, 4.0}, UtilityPoint{1.05, 3.9},
                             UtilityPoint{2.0, 2.0}, UtilityPoint{4.0, 1.0}});
    const FiniteUtilitySet s = eps_approx_construct(u, 0.1);
    const EpsTheoremCheck t = check_eps_expansion_theorem(s, u, 0.1);
    CHECK(t.definitional);
    CHECK(t.expansion_form);
  }

  SUBCASE("between 1 + eps and exp(eps) the verdicts split") {
    // ratio 2.5 fails the factor-2 test yet sits inside the exp(1) ball
    const auto u = make_set({UtilityPoint{2.5, 2.5}, UtilityPoint{1.0, 1.0}});
    const auto s = make_set({UtilityPoint{1.0, 1.0}});
    const EpsTheoremCheck t = check_eps_expansion_theorem(s, u, 1.0);
    CHECK_FALSE(t.definitional);
    CHECK(t.expansion_form);
  }
}
