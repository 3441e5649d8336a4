#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pgauge/policies.hpp"

using namespace pgauge;

namespace {
FiniteUtilitySet make_set(std::vector<UtilityPoint> pts) {
  return FiniteUtilitySet(std::move(pts));
}
}  // namespace

TEST_CASE("index optimization breaks exact ties lexicographically") {
  const auto u = make_set({UtilityPoint{1.0, 3.0}, UtilityPoint{3.0, 1.0},
                           UtilityPoint{2.0, 2.0}, UtilityPoint{0.0, 1.0}});
  // three points share the maximal sum 4
  const auto lo =
      PolicySpec::index_opt(IndexSpec::arithmetic(), TieBreak::LexMin);
  const auto hi =
      PolicySpec::index_opt(IndexSpec::arithmetic(), TieBreak::LexMax);
  CHECK(apply_policy(lo, u) == UtilityPoint{1.0, 3.0});
  CHECK(apply_policy(hi, u) == UtilityPoint{3.0, 1.0});
  // LexMax is the default
  CHECK(apply_policy(PolicySpec::index_opt(IndexSpec::arithmetic()), u) ==
        UtilityPoint{3.0, 1.0});
}

TEST_CASE("points outside an index's domain are skipped, not fatal") {
  const auto u = make_set({UtilityPoint{0.0, 1.0}, UtilityPoint{1.0, 1.0}});
  const auto p = PolicySpec::index_opt(IndexSpec::harmonic());
  CHECK(apply_policy(p, u) == UtilityPoint{1.0, 1.0});

  const auto all_excluded = make_set({UtilityPoint{0.0, 1.0}});
  CHECK_THROWS_AS(apply_policy(p, all_excluded), std::domain_error);
}

TEST_CASE("the fair policy maximizes the sorted vector lexicographically") {
  const auto fair = PolicySpec::maxmin_fair();
  CHECK(apply_policy(fair, make_set({UtilityPoint{1.0, 5.0},
                                     UtilityPoint{2.0, 2.0},
                                     UtilityPoint{3.0, 1.0}})) ==
        UtilityPoint{2.0, 2.0});

  // (1,2) and (2,1) have the same sorted profile; the tiebreak decides
  const auto u = make_set({UtilityPoint{1.0, 2.0}, UtilityPoint{2.0, 1.0},
                           UtilityPoint{0.0, 3.0}});
  CHECK(apply_policy(PolicySpec::maxmin_fair(TieBreak::LexMin), u) ==
        UtilityPoint{1.0, 2.0});
  CHECK(apply_policy(PolicySpec::maxmin_fair(TieBreak::LexMax), u) ==
        UtilityPoint{2.0, 1.0});

  // leximin refines the plain minimum: among equal minima the second
  // smallest coordinate decides
  CHECK(apply_policy(fair, make_set({UtilityPoint{1.0, 9.0},
                                     UtilityPoint{1.0, 2.0}})) ==
        UtilityPoint{1.0, 9.0});
}

TEST_CASE("fixed policies insist on membership") {
  const auto u = make_set({UtilityPoint{1.0, 2.0}, UtilityPoint{2.0, 1.0}});
  const auto p = PolicySpec::fixed(UtilityPoint{1.0, 2.0});
  CHECK(apply_policy(p, u) == UtilityPoint{1.0, 2.0});
  CHECK_THROWS_AS(
      apply_policy(PolicySpec::fixed(UtilityPoint{9.0, 9.0}), u),
      std::invalid_argument);
}

TEST_CASE("closed-form optimizers on the weighted-first-player family") {
  const SmnFamily fam(2.0, 3);
  CHECK(smn_closed_form(SmnObjective::Sum, fam) ==
        UtilityPoint{2.0, 0.0, 0.0});
  const double c = 1.0 / 2.5;
  CHECK(smn_closed_form(SmnObjective::Min, fam) == UtilityPoint{c, c, c});
  CHECK(smn_closed_form(SmnObjective::Product, fam) ==
        UtilityPoint{2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});

  // each saturates the weighted budget exactly
  for (const auto obj :
       {SmnObjective::Sum, SmnObjective::Min, SmnObjective::Product}) {
    const UtilityPoint p = smn_closed_form(obj, fam);
    double lhs = p.coords()[0] / fam.M();
    for (std::size_t k = 1; k < p.dim(); ++k) lhs += p.coords()[k];
    CHECK(lhs == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("set growth can strictly hurt every player at once") {
  const auto small = make_set({UtilityPoint{2.0, 2.0}});
  const auto big = make_set({UtilityPoint{1.0, 1.0}, UtilityPoint{2.0, 2.0}});
  const auto policy =
      PolicySpec::index_opt(IndexSpec::jain(), TieBreak::LexMin);

  const auto w = braess_detect(policy, small, big);
  REQUIRE(w.has_value());
  CHECK(w->a1 == UtilityPoint{2.0, 2.0});
  CHECK(w->a2 == UtilityPoint{1.0, 1.0});

  // a monotone objective never triggers it on the same pair
  CHECK_FALSE(braess_detect(PolicySpec::index_opt(IndexSpec::arithmetic()),
                            small, big)
                  .has_value());

  // the smaller set must actually be contained in the larger
  CHECK_THROWS_AS(
      braess_detect(policy, make_set({UtilityPoint{9.0, 9.0}}), big),
      std::invalid_argument);
}

TEST_CASE("objective decrease along a growing chain is localized") {
  const auto policy = PolicySpec::index_opt(IndexSpec::jain());
  const IndexSpec f = IndexSpec::arithmetic();
  const std::vector<FiniteUtilitySet> chain = {
      make_set({UtilityPoint{1.0, 1.0}}),
      make_set({UtilityPoint{1.0, 1.0}, UtilityPoint{0.9, 0.9}}),
      make_set({UtilityPoint{1.0, 1.0}, UtilityPoint{0.9, 0.9},
                UtilityPoint{1.3, 0.5}}),
  };
  // jain prefers (1,1) over (1.3,0.5) and ties (0.9,0.9) with (1,1);
  // the sum of the pick never drops on this chain
  CHECK_FALSE(check_f_increasing(policy, f, chain).has_value());

  const std::vector<FiniteUtilitySet> dropping = {
      make_set({UtilityPoint{0.8, 1.2}}),
      make_set({UtilityPoint{0.8, 1.2}, UtilityPoint{0.9, 0.9}}),
  };
  // adding the perfectly even point lures the fairness optimizer down
  const auto v = check_f_increasing(policy, f, dropping);
  REQUIRE(v.has_value());
  CHECK(v->index == 1);
  CHECK(v->value_before == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(v->value_after == doctest::Approx(1.8).epsilon(1e-12));

  CHECK_THROWS_AS(
      check_f_increasing(policy, f, {make_set({UtilityPoint{1.0, 1.0}})}),
      std::invalid_argument);
}

TEST_CASE("opposing orders between two indexes are found reproducibly") {
  const auto a = find_cross_index_violation(IndexSpec::arithmetic(),
                                            IndexSpec::min(), 2, 4000, 11);
  REQUIRE(a.has_value());
  CHECK(eval_index(IndexSpec::arithmetic(), a->x1) <
        eval_index(IndexSpec::arithmetic(), a->x2));
  CHECK(eval_index(IndexSpec::min(), a->x2) <
        eval_index(IndexSpec::min(), a->x1));
  REQUIRE(a->chain.size() == 2);
  CHECK(a->chain[0].size() == 1);
  CHECK(a->chain[1].size() == 2);
  // the chain realizes the drop for the first index
  const auto opt_g =
      PolicySpec::index_opt(IndexSpec::min(), TieBreak::LexMin);
  const auto v =
      check_f_increasing(opt_g, IndexSpec::arithmetic(), a->chain);
  CHECK(v.has_value());

  const auto b = find_cross_index_violation(IndexSpec::arithmetic(),
                                            IndexSpec::min(), 2, 4000, 11);
  REQUIRE(b.has_value());
  CHECK(a->x1 == b->x1);
  CHECK(a->x2 == b->x2);

  // an index never disagrees with itself
  CHECK_FALSE(find_cross_index_violation(IndexSpec::arithmetic(),
                                         IndexSpec::arithmetic(), 2, 200, 11)
                  .has_value());
}

TEST_CASE("the built-in policy catalog is labeled unambiguously") {
  const std::vector<PolicySpec> cat = policy_catalog();
  CHECK(cat.size() == 8);
  std::set<std::string> labels;
  for (const auto& p : cat) labels.insert(p.label());
  CHECK(labels.size() == cat.size());
  CHECK(labels.count("maxmin-fair") == 1);
  CHECK(labels.count("arithmetic-opt") == 1);
}
