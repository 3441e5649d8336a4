#include "pgauge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgauge/demos.hpp"
#include "pgauge/indexes.hpp"
#include "pgauge/inefficiency.hpp"
#include "pgauge/json_io.hpp"
#include "pgauge/pareto.hpp"
#include "pgauge/point.hpp"
#include "pgauge/policies.hpp"
#include "pgauge/random.hpp"
#include "pgauge/sets.hpp"

namespace pgauge::verify {
namespace {

struct Failure {
  std::string message;
};

void expect(bool cond, const std::string& message) {
  if (!cond) throw Failure{message};
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool rel_near(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<double> sorted_ascending(const UtilityPoint& p) {
  std::vector<double> v = p.coords();
  std::sort(v.begin(), v.end());
  return v;
}

bool exact_member(const UtilityPoint& p, const FiniteUtilitySet& s) {
  return std::find(s.points().begin(), s.points().end(), p) !=
         s.points().end();
}

double dot(const std::vector<double>& w, const UtilityPoint& p) {
  double acc = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * p[k];
  return acc;
}

// ---------------------------------------------------------------- utility

std::string p_hausdorff_metric(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 40; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    const FiniteUtilitySet a = random_set(rng, dim, 6, 0.0, 5.0);
    const FiniteUtilitySet b = random_set(rng, dim, 6, 0.0, 5.0);
    const FiniteUtilitySet c = random_set(rng, dim, 6, 0.0, 5.0);
    expect(hausdorff(a, a) == 0.0, "distance from a set to itself is not 0");
    expect(hausdorff(a, b) == hausdorff(b, a), "distance is not symmetric");
    expect(hausdorff(a, c) <= hausdorff(a, b) + hausdorff(b, c) + 1e-12,
           "triangle inequality violated");
  }
  std::vector<UtilityPoint> pts = {{1.0, 2.0}, {3.0, 0.5}};
  const FiniteUtilitySet plain(pts);
  pts.push_back(UtilityPoint{1.0, 2.0});
  const FiniteUtilitySet with_dup(pts);
  expect(hausdorff(plain, with_dup) == 0.0,
         "duplicated points changed the distance");
  return "identity, symmetry, triangle on 40 random triples";
}

std::string p_dominance_order(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 300; ++t) {
    const std::size_t dim = 1 + uniform_index(rng, 3);
    const UtilityPoint u = random_point(rng, dim, 0.0, 4.0, 0.5);
    const UtilityPoint v = random_point(rng, dim, 0.0, 4.0, 0.5);
    const UtilityPoint w = random_point(rng, dim, 0.0, 4.0, 0.5);
    expect(dominates(u, u), "order is not reflexive");
    if (dominates(u, v) && dominates(v, u)) {
      expect(u == v, "antisymmetry violated");
    }
    if (dominates(u, v) && dominates(v, w)) {
      expect(dominates(u, w), "transitivity violated");
    }
    expect(!pareto_less(u, u), "strict part is not irreflexive");
    expect(pareto_less(u, v) == (dominates(u, v) && u != v),
           "strict part disagrees with the weak order");
    if (strictly_dominated_by_all_coords(u, v)) {
      expect(pareto_less(u, v),
             "coordinatewise-strict implies strict, violated");
    }
  }
  return "order axioms on 300 quantized triples";
}

std::string p_grid_nesting(std::uint64_t) {
  const HalfspaceSet h2(2, {{{1.0, 2.0}, 2.0}});
  const FiniteUtilitySet coarse2 = discretize(h2, 3);
  const FiniteUtilitySet fine2 = discretize(h2, 5);
  for (const auto& p : coarse2.points()) {
    expect(fine2.contains(p, 0.0),
           "coarse grid point missing from refined grid: " + p.to_string());
  }
  for (const auto& p : fine2.points()) {
    expect(h2.feasible(p), "grid point violates a constraint");
  }
  const HalfspaceSet h3(3, {{{0.5, 1.0, 1.0}, 1.0}});
  const FiniteUtilitySet coarse3 = discretize(h3, 4);
  const FiniteUtilitySet fine3 = discretize(h3, 7);
  for (const auto& p : coarse3.points()) {
    expect(fine3.contains(p, 0.0),
           "3-d coarse grid point missing from refined grid");
  }
  return "grids at compatible resolutions nest exactly";
}

std::string p_log_map_round_trip(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 30; ++t) {
    const FiniteUtilitySet s =
        random_set(rng, 2 + uniform_index(rng, 2), 6, 0.1, 10.0);
    const auto logs = log_map(s);
    for (std::size_t i = 0; i < logs.size(); ++i) {
      for (std::size_t k = 0; k < logs[i].size(); ++k) {
        expect(rel_near(std::exp(logs[i][k]), s.points()[i][k], 1e-12),
               "exp did not undo the log map");
      }
    }
  }
  bool threw = false;
  try {
    log_map(FiniteUtilitySet({UtilityPoint{0.0, 1.0}}));
  } catch (const std::domain_error&) {
    threw = true;
  }
  expect(threw, "zero coordinate was not rejected");
  return "exp(log(.)) within 1e-12, zero coordinates rejected";
}

std::string p_family_constraints(std::uint64_t) {
  const SmnFamily fam(2.5, 3);
  const HalfspaceSet h = smn_halfspaces(fam);
  expect(h.dim() == 3 && h.constraints().size() == 1,
         "family must have one constraint over N players");
  const LinearConstraint& c = h.constraints().front();
  expect(c.bound == 1.0 && c.weights[0] == 1.0 / 2.5 &&
             c.weights[1] == 1.0 && c.weights[2] == 1.0,
         "constraint weights are not (1/M, 1, ..., 1) with bound 1");

  const std::vector<std::pair<double, int>> cases = {
      {1.0, 2}, {2.0, 3}, {7.3, 4}, {100.0, 3}};
  for (const auto& [m, n] : cases) {
    const SmnFamily family(m, n);
    const HalfspaceSet hs = smn_halfspaces(family);
    for (SmnObjective obj :
         {SmnObjective::Sum, SmnObjective::Min, SmnObjective::Product}) {
      const UtilityPoint p = smn_closed_form(obj, family);
      expect(hs.feasible(p), "closed form is infeasible");
      const double lhs = dot(hs.constraints().front().weights, p);
      expect(near(lhs, 1.0, 1e-12),
             "closed form does not saturate the constraint, slack " +
                 fmt(1.0 - lhs));
    }
  }
  return "shape and exact saturation across M in {1, 2, 7.3, 100}";
}

// ---------------------------------------------------------------- indexes

std::string p_permutation_symmetry(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 3);
    const UtilityPoint u = random_point(rng, dim, 0.1, 10.0);
    std::vector<double> rot = u.coords();
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    const UtilityPoint v(rot);

    std::vector<double> weights(dim);
    for (auto& w : weights) w = uniform(rng, 0.1, 1.0);

    const IndexSpec specs[] = {
        IndexSpec::arithmetic(),         IndexSpec::min(),
        IndexSpec::max(),                IndexSpec::geometric(),
        IndexSpec::harmonic(),           IndexSpec::jain(),
        IndexSpec::quasi_arithmetic(2.0), IndexSpec::quasi_arithmetic(-1.3),
        IndexSpec::owa(weights)};
    for (const auto& f : specs) {
      expect(rel_near(eval_index(f, u), eval_index(f, v), 1e-9),
             f.name() + " is not symmetric under permutation");
    }
  }
  return "9 indexes invariant under coordinate rotation, 100 points";
}

std::string p_spot_values(std::uint64_t) {
  const UtilityPoint u{1.0, 2.0, 3.0};
  expect(eval_index(IndexSpec::arithmetic(), u) == 6.0, "sum of (1,2,3)");
  expect(eval_index(IndexSpec::min(), u) == 1.0, "min of (1,2,3)");
  expect(eval_index(IndexSpec::max(), u) == 3.0, "max of (1,2,3)");
  expect(near(eval_index(IndexSpec::geometric(), u), 6.0, 1e-12),
         "product of (1,2,3)");
  expect(near(eval_index(IndexSpec::harmonic(), u), 6.0 / 11.0, 1e-12),
         "harmonic value of (1,2,3)");
  expect(near(eval_index(IndexSpec::jain(), u), 6.0 / 7.0, 1e-12),
         "fairness value of (1,2,3)");
  expect(near(eval_index(IndexSpec::quasi_arithmetic(1.0), u), 2.0, 1e-12),
         "power mean, exponent 1");
  expect(near(eval_index(IndexSpec::quasi_arithmetic(2.0), u),
              std::sqrt(14.0 / 3.0), 1e-12),
         "power mean, exponent 2");
  expect(near(eval_index(IndexSpec::quasi_arithmetic(0.0), u), std::cbrt(6.0),
              1e-12),
         "power mean, exponent 0 (geometric mean)");
  expect(near(eval_index(IndexSpec::quasi_arithmetic(-1.0), u), 18.0 / 11.0,
              1e-12),
         "power mean, exponent -1 (harmonic mean)");
  expect(near(eval_index(IndexSpec::owa({0.5, 0.3, 0.2}),
                         UtilityPoint{3.0, 1.0, 2.0}),
              1.7, 1e-12),
         "ordered weighted average sorts ascending first");
  expect(near(jain_fair_point(u), 7.0 / 3.0, 1e-12), "fair share of (1,2,3)");
  expect(eval_index(IndexSpec::jain(), UtilityPoint{0.7, 0.7, 0.7, 0.7}) ==
             1.0,
         "equal split must score exactly 1");
  expect(jain_relative(UtilityPoint{2.0, 4.0}, UtilityPoint{1.0, 2.0}) == 1.0,
         "proportional vectors must score exactly 1");
  return "13 frozen values";
}

std::string p_jain_bounds(std::uint64_t seed) {
  Rng rng(seed);
  const IndexSpec jain = IndexSpec::jain();
  for (int t = 0; t < 200; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 3);
    const UtilityPoint u = random_point(rng, dim, 0.0, 10.0, 1.0);
    const double j = eval_index(jain, u);
    expect(j >= 1.0 / dim - 1e-12 && j <= 1.0 + 1e-12,
           "value " + fmt(j) + " escapes [1/n, 1]");
    const double c = log_uniform(rng, 0.01, 100.0);
    std::vector<double> scaled = u.coords();
    for (auto& x : scaled) x *= c;
    if (!u.is_zero()) {
      expect(rel_near(j, eval_index(jain, UtilityPoint(scaled)), 1e-12),
             "not scale invariant");
    }
    const auto [mn, mx] =
        std::minmax_element(u.coords().begin(), u.coords().end());
    if (*mx == *mn) {
      expect(u.is_zero() ? j == 1.0 / dim : j == 1.0,
             "equal coordinates must score exactly 1");
    } else {
      expect(j < 1.0 - 1e-5, "unequal coordinates must score below 1");
    }
  }
  expect(eval_index(jain, UtilityPoint{0.0, 0.0, 0.0}) == 1.0 / 3.0,
         "all-zero point must score 1/n");
  return "bounds, scale invariance, equality case on 200 points";
}

std::string p_fair_share(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 3);
    const UtilityPoint u = random_point(rng, dim, 0.1, 10.0);
    const double fair = jain_fair_point(u);
    const auto [mn, mx] =
        std::minmax_element(u.coords().begin(), u.coords().end());
    expect(fair >= *mn - 1e-12 && fair <= *mx + 1e-12,
           "fair share left the coordinate range");
    expect(jain_relative(u, u) == 1.0, "a point relative to itself is fair");
    const double c = log_uniform(rng, 0.1, 10.0);
    std::vector<double> scaled = u.coords();
    for (auto& x : scaled) x *= c;
    expect(near(jain_relative(UtilityPoint(scaled), u), 1.0, 1e-12),
           "scaling should be perfectly fair relative to the original");
  }
  bool threw = false;
  try {
    jain_fair_point(UtilityPoint{0.0, 0.0});
  } catch (const std::domain_error&) {
    threw = true;
  }
  expect(threw, "fair share of the zero point was not rejected");
  threw = false;
  try {
    jain_relative(UtilityPoint{1.0, 1.0}, UtilityPoint{1.0, 0.0});
  } catch (const std::domain_error&) {
    threw = true;
  }
  expect(threw, "zero reference coordinate was not rejected");
  return "range, self-fairness, scaling on 100 points";
}

std::string p_power_mean_limits(std::uint64_t seed) {
  Rng rng(seed);
  const double inf = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 3);
    const UtilityPoint u = random_point(rng, dim, 0.1, 10.0);
    expect(eval_index(IndexSpec::quasi_arithmetic(inf), u) ==
               eval_index(IndexSpec::max(), u),
           "exponent +inf must equal max exactly");
    expect(eval_index(IndexSpec::quasi_arithmetic(-inf), u) ==
               eval_index(IndexSpec::min(), u),
           "exponent -inf must equal min exactly");
    double mean_log = 0.0;
    for (double x : u.coords()) mean_log += std::log(x);
    const double geo = std::exp(mean_log / dim);
    expect(rel_near(eval_index(IndexSpec::quasi_arithmetic(0.0), u), geo,
                    1e-12),
           "exponent 0 must equal the geometric mean");
    const double lo = eval_index(IndexSpec::quasi_arithmetic(-1e-4), u);
    const double hi = eval_index(IndexSpec::quasi_arithmetic(1e-4), u);
    expect(lo <= geo + 1e-12 && geo <= hi + 1e-12,
           "small exponents must bracket the geometric mean");
    expect(rel_near(std::sqrt(lo * hi), geo, 1e-6),
           "bracket midpoint drifted from the geometric mean: " +
               fmt(std::sqrt(lo * hi)) + " vs " + fmt(geo));
  }
  return "infinite and vanishing exponents on 100 points";
}

std::string p_power_mean_monotone(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 3);
    const UtilityPoint u = random_point(rng, dim, 0.1, 10.0);
    std::vector<double> deltas(5);
    for (auto& d : deltas) d = uniform(rng, -6.0, 6.0);
    std::sort(deltas.begin(), deltas.end());
    double prev = -std::numeric_limits<double>::infinity();
    for (double d : deltas) {
      const double v = eval_index(IndexSpec::quasi_arithmetic(d), u);
      expect(v >= prev - 1e-12 * std::max(1.0, std::abs(v)),
             "power mean decreased as the exponent grew");
      prev = v;
    }
  }
  return "nondecreasing in the exponent, 100 points x 5 exponents";
}

std::string p_monotonicity_classes(std::uint64_t seed) {
  const std::pair<IndexSpec, Monotonicity> expected[] = {
      {IndexSpec::arithmetic(), Monotonicity::StrictlyMonotone},
      {IndexSpec::geometric(), Monotonicity::StrictlyMonotone},
      {IndexSpec::harmonic(), Monotonicity::StrictlyMonotone},
      {IndexSpec::quasi_arithmetic(2.0), Monotonicity::StrictlyMonotone},
      {IndexSpec::min(), Monotonicity::MonotoneNotStrict},
      {IndexSpec::max(), Monotonicity::MonotoneNotStrict},
      {IndexSpec::jain(), Monotonicity::NonMonotone},
  };
  int k = 0;
  for (const auto& [f, want] : expected) {
    const MonotonicityVerdict got =
        classify_monotonicity(f, 3, 400, seed + static_cast<std::uint64_t>(k));
    expect(got.verdict == want, f.name() + " was misclassified");
    if (want != Monotonicity::StrictlyMonotone) {
      expect(got.witness.has_value(), f.name() + " verdict lacks a witness");
      const auto& [lo, hi] = *got.witness;
      expect(dominates(lo, hi) && lo != hi, "witness pair is not ordered");
      const double flo = eval_index(f, lo);
      const double fhi = eval_index(f, hi);
      if (want == Monotonicity::NonMonotone) {
        expect(flo > fhi, "witness does not show a decrease");
      } else {
        expect(flo == fhi, "witness does not show a plateau");
      }
    }
    ++k;
  }
  return "7 indexes classified as expected, 400 trials each";
}

std::string p_harmonic_domain(std::uint64_t) {
  const UtilityPoint z{1.0, 0.0};
  expect(!IndexSpec::harmonic().domain_ok(z),
         "harmonic must exclude zero coordinates");
  expect(!IndexSpec::quasi_arithmetic(-2.0).domain_ok(z),
         "negative exponents must exclude zero coordinates");
  expect(IndexSpec::quasi_arithmetic(2.0).domain_ok(z),
         "positive exponents are defined at zero");
  expect(eval_index(IndexSpec::geometric(), z) == 0.0,
         "product with a zero coordinate is zero");
  bool threw = false;
  try {
    eval_index(IndexSpec::harmonic(), z);
  } catch (const std::domain_error&) {
    threw = true;
  }
  expect(threw, "harmonic at a zero coordinate did not raise");
  return "domain guards for harmonic and negative exponents";
}

// ----------------------------------------------------------------- pareto

std::string p_front_members_maximal(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 60; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    const double quantum = t % 2 == 0 ? 0.5 : 0.0;
    const FiniteUtilitySet u = random_set(rng, dim, 10, 0.0, 5.0, quantum);
    const ParetoFront front = pareto_filter(u);
    expect(front.source_size == u.size(), "source size not recorded");
    const auto& fp = front.points.points();
    for (const auto& p : fp) {
      expect(exact_member(p, u), "front point not drawn from the set");
      expect(is_pareto_optimal(p, u), "front point is improvable");
    }
    for (std::size_t i = 0; i < fp.size(); ++i) {
      for (std::size_t j = 0; j < fp.size(); ++j) {
        if (i == j) continue;
        expect(!pareto_less(fp[i], fp[j]), "front points are comparable");
        expect(fp[i] != fp[j], "duplicate survived filtering");
      }
    }
  }
  return "maximality, incomparability, dedup on 60 sets";
}

std::string p_dropped_covered(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 60; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    const FiniteUtilitySet u =
        random_set(rng, dim, 10, 0.0, 5.0, t % 2 == 0 ? 0.5 : 0.0);
    const ParetoFront front = pareto_filter(u);
    for (const auto& q : u.points()) {
      bool covered = exact_member(q, front.points);
      for (const auto& p : front.points.points()) {
        covered = covered || pareto_less(q, p);
      }
      expect(covered, "dropped point " + q.to_string() +
                          " is not improved by any front point");
    }
  }
  return "every dropped point improved by a kept one, 60 sets";
}

std::string p_filter_idempotent(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 40; ++t) {
    const FiniteUtilitySet u = random_set(rng, 2, 12, 0.0, 5.0, 0.5);
    const ParetoFront once = pareto_filter(u);
    const ParetoFront twice = pareto_filter(once.points);
    expect(twice.points.same_points(once.points),
           "filtering a front changed it");
    expect(twice.points.size() == once.points.size(),
           "filtering a front changed its size");
  }
  return "filter is idempotent on 40 sets";
}

std::string p_expansion_membership(std::uint64_t) {
  const FiniteUtilitySet base({UtilityPoint{2.0, 2.0}});
  expect(expand_contains(Expansion::multiplicative(base, 2.0),
                         UtilityPoint{1.0, 1.0}),
         "(1,1) must lie exactly on the factor-2 boundary around (2,2)");
  expect(!expand_contains(Expansion::multiplicative(base, 1.99),
                          UtilityPoint{1.0, 1.0}),
         "factor 1.99 must not reach (1,1)");
  const FiniteUtilitySet one({UtilityPoint{1.0, 1.0}});
  expect(expand_contains(Expansion::additive(one, 0.5),
                         UtilityPoint{1.5, 1.0}),
         "additive radius 0.5 must reach distance-0.5 points");
  expect(!expand_contains(Expansion::additive(one, 0.5),
                          UtilityPoint{1.51, 1.0}),
         "additive radius 0.5 must not reach beyond");
  bool threw = false;
  try {
    expand_contains(Expansion::multiplicative(base, 2.0),
                    UtilityPoint{0.0, 1.0});
  } catch (const std::domain_error&) {
    threw = true;
  }
  expect(threw, "multiplicative membership accepted a zero coordinate");
  return "boundary-exact membership in both forms";
}

std::string p_coverage_of_construction(std::uint64_t seed) {
  Rng rng(seed);
  for (double eps : {0.1, 0.25, 1.0}) {
    for (int t = 0; t < 25; ++t) {
      const std::size_t dim = 2 + uniform_index(rng, 2);
      const FiniteUtilitySet u = random_set(rng, dim, 14, 0.1, 10.0);
      const FiniteUtilitySet s = eps_approx_construct(u, eps);
      const ParetoFront front = pareto_filter(u);
      expect(s.size() <= front.points.size(),
             "summary larger than the front");
      for (const auto& p : s.points()) {
        expect(exact_member(p, front.points),
               "summary point is not a front point");
      }
      const EpsCoverage cov = verify_eps_approx(s, u, eps);
      expect(cov.covered, "construction at eps " + fmt(eps) +
                              " left a point uncovered");
    }
  }
  return "construction covers, stays within the front, 75 sets";
}

std::string p_zero_tolerance_front(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 25; ++t) {
    const FiniteUtilitySet u = random_set(rng, 2, 12, 0.1, 10.0);
    const FiniteUtilitySet s = eps_approx_construct(u, 0.0);
    expect(s.same_points(pareto_filter(u).points),
           "tolerance 0 must return the whole front");
  }
  return "tolerance 0 reproduces the front exactly, 25 sets";
}

std::string p_coverage_two_forms(std::uint64_t seed) {
  Rng rng(seed);
  for (double eps : {0.1, 0.5, 1.0}) {
    for (int t = 0; t < 20; ++t) {
      const FiniteUtilitySet u =
          random_set(rng, 2 + uniform_index(rng, 2), 12, 0.1, 10.0);
      const FiniteUtilitySet s = eps_approx_construct(u, eps);
      const EpsTheoremCheck chk = check_eps_expansion_theorem(s, u, eps);
      expect(chk.definitional, "definitional coverage failed");
      expect(chk.expansion_form, "neighborhood form failed");
    }
  }
  return "both formulations hold for constructed summaries, 60 sets";
}

std::string p_construction_compresses(std::uint64_t) {
  std::vector<UtilityPoint> curve;
  curve.reserve(200);
  for (int i = 0; i < 200; ++i) {
    const double x = i * 0.01;
    curve.push_back(UtilityPoint{std::exp(x), std::exp(-x)});
  }
  const FiniteUtilitySet u(std::move(curve));
  expect(pareto_filter(u).points.size() == 200,
         "trade-off curve should be entirely maximal");
  const FiniteUtilitySet s = eps_approx_construct(u, 1.0);
  expect(s.size() <= 8, "summary of a 200-point curve kept " +
                            std::to_string(s.size()) + " points");
  expect(verify_eps_approx(s, u, 1.0).covered, "compressed summary lost "
                                               "coverage");
  return "200-point curve covered by " + std::to_string(s.size()) +
         " points at tolerance 1";
}

// --------------------------------------------------------------- policies

std::string p_pick_member_argmax(std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<PolicySpec> catalog = policy_catalog();
  for (int t = 0; t < 40; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    const FiniteUtilitySet u =
        random_set(rng, dim, 10, 0.1, 10.0, t % 2 == 0 ? 0.25 : 0.0);
    for (const auto& policy : catalog) {
      const UtilityPoint pick = apply_policy(policy, u);
      expect(exact_member(pick, u), policy.label() + " left the set");
      if (policy.kind() == PolicySpec::Kind::IndexOpt) {
        const double best = eval_index(policy.index(), pick);
        for (const auto& p : u.points()) {
          if (!policy.index().domain_ok(p)) continue;
          expect(eval_index(policy.index(), p) <= best,
                 policy.label() + " pick is not maximal");
        }
      } else if (policy.kind() == PolicySpec::Kind::MaxMinFair) {
        const auto key = sorted_ascending(pick);
        for (const auto& p : u.points()) {
          expect(!lex_less(key, sorted_ascending(p)),
                 "fair pick is leximin-beaten by " + p.to_string());
        }
      }
    }
  }
  return "membership and optimality for the whole catalog, 40 sets";
}

std::string p_tiebreak_extremes(std::uint64_t) {
  const FiniteUtilitySet sums(
      {UtilityPoint{1.0, 3.0}, UtilityPoint{3.0, 1.0}, UtilityPoint{2.0, 2.0},
       UtilityPoint{0.0, 1.0}});
  const IndexSpec sum = IndexSpec::arithmetic();
  expect(apply_policy(PolicySpec::index_opt(sum, TieBreak::LexMin), sums) ==
             UtilityPoint{1.0, 3.0},
         "LexMin must take the lexicographically smallest optimum");
  expect(apply_policy(PolicySpec::index_opt(sum, TieBreak::LexMax), sums) ==
             UtilityPoint{3.0, 1.0},
         "LexMax must take the lexicographically largest optimum");

  const FiniteUtilitySet fair(
      {UtilityPoint{1.0, 2.0}, UtilityPoint{2.0, 1.0}, UtilityPoint{0.0, 3.0}});
  expect(apply_policy(PolicySpec::maxmin_fair(TieBreak::LexMin), fair) ==
             UtilityPoint{1.0, 2.0},
         "fair LexMin tie mis-resolved");
  expect(apply_policy(PolicySpec::maxmin_fair(TieBreak::LexMax), fair) ==
             UtilityPoint{2.0, 1.0},
         "fair LexMax tie mis-resolved");
  return "exact ties resolved at both lexicographic extremes";
}

std::string p_closed_forms_optimal(std::uint64_t) {
  const std::vector<std::pair<double, int>> cases = {
      {1.0, 2}, {2.0, 3}, {10.0, 3}, {7.3, 4}};
  for (const auto& [m, n] : cases) {
    const SmnFamily family(m, n);
    const FiniteUtilitySet grid =
        discretize(smn_halfspaces(family), n >= 4 ? 9 : 21);
    const UtilityPoint sum_pt = smn_closed_form(SmnObjective::Sum, family);
    const UtilityPoint min_pt = smn_closed_form(SmnObjective::Min, family);
    const UtilityPoint prod_pt =
        smn_closed_form(SmnObjective::Product, family);
    const IndexSpec sum = IndexSpec::arithmetic();
    const IndexSpec min = IndexSpec::min();
    const IndexSpec prod = IndexSpec::geometric();
    for (const auto& p : grid.points()) {
      expect(eval_index(sum, p) <= eval_index(sum, sum_pt) + 1e-12,
             "a grid point out-sums the closed form at M " + fmt(m));
      expect(eval_index(min, p) <= eval_index(min, min_pt) + 1e-12,
             "a grid point out-mins the closed form at M " + fmt(m));
      expect(eval_index(prod, p) <= eval_index(prod, prod_pt) + 1e-12,
             "a grid point out-multiplies the closed form at M " + fmt(m));
    }
    const std::vector<double>& c = min_pt.coords();
    expect(std::all_of(c.begin(), c.end(),
                       [&](double x) { return x == c.front(); }),
           "equal-share point has unequal coordinates");
  }
  return "closed forms dominate their grids for 4 family members";
}

std::string p_leximin_matches_min(std::uint64_t) {
  for (const auto& [m, n] :
       std::vector<std::pair<double, int>>{{2.0, 3}, {10.0, 3}, {5.0, 2}}) {
    const SmnFamily family(m, n);
    std::vector<UtilityPoint> pts =
        discretize(smn_halfspaces(family), 21).points();
    for (SmnObjective obj :
         {SmnObjective::Sum, SmnObjective::Min, SmnObjective::Product}) {
      pts.push_back(smn_closed_form(obj, family));
    }
    const FiniteUtilitySet u(std::move(pts));
    const UtilityPoint fair = apply_policy(PolicySpec::maxmin_fair(), u);
    const UtilityPoint min_opt =
        apply_policy(PolicySpec::index_opt(IndexSpec::min()), u);
    expect(near(eval_index(IndexSpec::min(), fair),
                eval_index(IndexSpec::min(), min_opt), 1e-12),
           "leximin and worst-coordinate optimization disagree on the "
           "guaranteed share");
  }
  return "leximin's guaranteed share matches min-optimization, 3 members";
}

std::string p_growth_anomaly(std::uint64_t seed) {
  const FiniteUtilitySet small({UtilityPoint{2.0, 2.0}});
  const FiniteUtilitySet large(
      {UtilityPoint{1.0, 1.0}, UtilityPoint{2.0, 2.0}});
  const auto hit = braess_detect(
      PolicySpec::index_opt(IndexSpec::jain(), TieBreak::LexMin), small,
      large);
  expect(hit.has_value(), "fairness with LexMin must regress on this pair");
  expect(hit->a1 == UtilityPoint{2.0, 2.0} &&
             hit->a2 == UtilityPoint{1.0, 1.0},
         "unexpected witness allocations");
  expect(!braess_detect(
              PolicySpec::index_opt(IndexSpec::jain(), TieBreak::LexMax),
              small, large)
              .has_value(),
         "LexMax tie-breaking must be immune here");

  Rng rng(seed);
  const PolicySpec sum_opt = PolicySpec::index_opt(IndexSpec::arithmetic());
  for (int t = 0; t < 200; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    const FiniteUtilitySet u2 = random_set(rng, dim, 10, 0.1, 10.0);
    std::vector<UtilityPoint> sub;
    for (std::size_t i = 0; i < u2.size(); i += 2) sub.push_back(u2.points()[i]);
    const FiniteUtilitySet u1(std::move(sub));
    expect(!braess_detect(sum_opt, u1, u2).has_value(),
           "sum optimization regressed on a nested pair");
  }
  return "known regression found; sum optimization clean on 200 pairs";
}

std::string p_growth_chains(std::uint64_t seed) {
  Rng rng(seed);
  const PolicySpec sum_opt = PolicySpec::index_opt(IndexSpec::arithmetic());
  const IndexSpec sum = IndexSpec::arithmetic();
  for (int t = 0; t < 50; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    std::vector<UtilityPoint> acc = random_set(rng, dim, 5, 0.1, 10.0).points();
    std::vector<FiniteUtilitySet> chain;
    chain.emplace_back(acc);
    for (int step = 0; step < 3; ++step) {
      const FiniteUtilitySet extra = random_set(rng, dim, 4, 0.1, 10.0);
      for (const auto& p : extra.points()) acc.push_back(p);
      chain.emplace_back(acc);
    }
    expect(!check_f_increasing(sum_opt, sum, chain).has_value(),
           "optimizing an index must not decrease it along a chain");
  }

  const std::vector<FiniteUtilitySet> chain = {
      FiniteUtilitySet({UtilityPoint{1.0, 1.0}}),
      FiniteUtilitySet({UtilityPoint{1.0, 1.0}, UtilityPoint{0.9, 0.9}})};
  const auto viol = check_f_increasing(
      PolicySpec::index_opt(IndexSpec::jain(), TieBreak::LexMin), sum, chain);
  expect(viol.has_value() && viol->index == 1,
         "fairness tie walking downward was not flagged");
  expect(viol->value_before == 2.0 && near(viol->value_after, 1.8, 1e-12),
         "violation values are wrong");
  return "self-optimization monotone on 50 chains; cross case flagged";
}

std::string p_cross_index_reversals(std::uint64_t seed) {
  const std::vector<std::pair<IndexSpec, IndexSpec>> pairs = {
      {IndexSpec::arithmetic(), IndexSpec::geometric()},
      {IndexSpec::min(), IndexSpec::max()},
      {IndexSpec::harmonic(), IndexSpec::arithmetic()},
      {IndexSpec::max(), IndexSpec::arithmetic()},
  };
  int k = 0;
  for (const auto& [f, g] : pairs) {
    const auto w = find_cross_index_violation(
        f, g, 2, 4000, seed + static_cast<std::uint64_t>(k++));
    expect(w.has_value(),
           "no reversal found for " + f.name() + " vs " + g.name());
    expect(eval_index(f, w->x1) + 1e-6 <= eval_index(f, w->x2),
           "first margin violated");
    expect(eval_index(g, w->x2) + 1e-6 <= eval_index(g, w->x1),
           "second margin violated");
    const auto viol =
        check_f_increasing(PolicySpec::index_opt(g), f, w->chain);
    expect(viol.has_value() && viol->index == 1,
           "witness chain does not demonstrate the decrease");
  }
  return "reversals found and demonstrated for 4 index pairs";
}

std::string p_fixed_policy(std::uint64_t) {
  const UtilityPoint p{1.0, 2.0};
  const FiniteUtilitySet in({p, UtilityPoint{3.0, 4.0}});
  expect(apply_policy(PolicySpec::fixed(p), in) == p,
         "fixed policy must return its point");
  bool threw = false;
  try {
    apply_policy(PolicySpec::fixed(p),
                 FiniteUtilitySet({UtilityPoint{3.0, 4.0}}));
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  expect(threw, "fixed policy accepted a set missing its point");
  return "membership enforced";
}

// ------------------------------------------------------------ inefficiency

std::string p_ratio_at_least_one(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    const FiniteUtilitySet u = random_set(rng, dim, 10, 0.1, 10.0);
    const UtilityPoint beta = u.points()[uniform_index(rng, u.size())];
    for (const IndexSpec& f : {IndexSpec::arithmetic(), IndexSpec::geometric()}) {
      const double r = poa_instance(f, beta, u);
      expect(r >= 1.0, "ratio below 1 for a member baseline");
      const UtilityPoint best = apply_policy(PolicySpec::index_opt(f), u);
      expect(poa_instance(f, best, u) == 1.0,
             "ratio at the optimum must be exactly 1");
    }
  }
  return "lower bound and exact optimum on 100 sets";
}

std::string p_family_ratio_closed_forms(std::uint64_t) {
  const std::vector<std::pair<double, int>> cases = {
      {2.0, 3}, {10.0, 3}, {5.0, 2}, {100.0, 4}};
  for (const auto& [m, n] : cases) {
    const SmnFamily family(m, n);
    std::vector<UtilityPoint> pts =
        discretize(smn_halfspaces(family), n >= 4 ? 9 : 21).points();
    for (SmnObjective obj :
         {SmnObjective::Sum, SmnObjective::Min, SmnObjective::Product}) {
      pts.push_back(smn_closed_form(obj, family));
    }
    const FiniteUtilitySet u(pts);
    const IndexSpec sum = IndexSpec::arithmetic();
    const double nbs = poa_instance(
        sum, smn_closed_form(SmnObjective::Product, family), u);
    expect(rel_near(nbs, poa_smn_nbs(family), 1e-9),
           "bargaining-point ratio " + fmt(nbs) + " differs from MN/(M+N-1) " +
               fmt(poa_smn_nbs(family)));
    const double mm =
        poa_instance(sum, smn_closed_form(SmnObjective::Min, family), u);
    expect(rel_near(mm, poa_smn_maxmin(family), 1e-9),
           "equal-share ratio " + fmt(mm) + " differs from (M(N-1)+1)/N " +
               fmt(poa_smn_maxmin(family)));
  }
  return "measured ratios match both closed forms, 4 family members";
}

std::string p_degradation_two_sides(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 200; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    const FiniteUtilitySet u = random_set(rng, dim, 10, 0.1, 10.0);
    const UtilityPoint beta = u.points()[uniform_index(rng, u.size())];
    const double eps = uniform(rng, -0.5, 1.5);
    const auto [left, right] = sdf_lemma_check(beta, u, eps);
    expect(left == right, "the two sides disagree at eps " + fmt(eps));
    const double d = sdf_instance(beta, u);
    const auto above = sdf_lemma_check(beta, u, std::log(d) + 0.01);
    expect(above.first && above.second, "both sides must hold above log(d)");
    const auto below = sdf_lemma_check(beta, u, std::log(d) - 0.01);
    expect(!below.first && !below.second,
           "both sides must fail below log(d)");
  }
  return "sides agree on 200 draws and straddle the threshold";
}

std::string p_degradation_zeros(std::uint64_t) {
  const FiniteUtilitySet u({UtilityPoint{0.0, 5.0}, UtilityPoint{1.0, 1.0}});
  expect(sdf_instance(UtilityPoint{1.0, 1.0}, u) == 1.0,
         "zero-coordinate candidate must contribute ratio 0");
  expect(sdf_instance(UtilityPoint{0.5, 0.5}, u) == 2.0,
         "best candidate mis-evaluated");
  bool threw = false;
  try {
    sdf_instance(UtilityPoint{0.0, 1.0}, u);
  } catch (const std::domain_error&) {
    threw = true;
  }
  expect(threw, "zero-coordinate baseline was not rejected");
  const auto [left, right] = sdf_lemma_check(UtilityPoint{1.0, 1.0}, u, 0.0);
  expect(left && right, "log of a zero coordinate must count as -inf");
  return "zero coordinates on the candidate side are harmless";
}

std::string p_distance_two_routes(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    const FiniteUtilitySet u =
        random_set(rng, dim, 10, 0.1, 10.0, t % 2 == 0 ? 0.25 : 0.0);
    const UtilityPoint beta = u.points()[uniform_index(rng, u.size())];
    const TopoForms forms = topo_instance_forms(beta, u);
    expect(near(forms.from_logs, forms.from_ratios, 1e-9),
           "log-space and ratio routes disagree: " + fmt(forms.from_logs) +
               " vs " + fmt(forms.from_ratios));
    const double d = topo_instance(beta, u);
    expect(d >= 1.0, "distance fell below 1");
    expect((d == 1.0) == is_pareto_optimal(beta, u),
           "distance 1 must characterize maximal points exactly");
  }
  return "route agreement and the =1 characterization on 100 sets";
}

std::string p_distance_threshold(std::uint64_t seed) {
  const FiniteUtilitySet u({UtilityPoint{1.0, 1.0}, UtilityPoint{2.0, 2.0}});
  expect(topo_expansion_check(UtilityPoint{1.0, 1.0}, u, std::log(2.0)),
         "(1,1) must sit exactly on the log(2) boundary");
  expect(!topo_expansion_check(UtilityPoint{1.0, 1.0}, u, 0.69),
         "slack below log(2) must exclude (1,1)");

  Rng rng(seed);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    const FiniteUtilitySet set = random_set(rng, dim, 10, 0.1, 10.0);
    const UtilityPoint beta = set.points()[uniform_index(rng, set.size())];
    const double eps = uniform(rng, 0.0, 1.0);
    const TopoForms forms = topo_instance_forms(beta, set);
    expect(topo_expansion_check(beta, set, eps) ==
               (forms.from_logs <= std::exp(eps)),
           "neighborhood test disagrees with the distance value");
  }
  return "boundary case exact; threshold equivalence on 100 draws";
}

std::string p_report_consistency(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 50; ++t) {
    const std::size_t dim = 2 + uniform_index(rng, 2);
    const FiniteUtilitySet u = random_set(rng, dim, 10, 0.1, 10.0);
    const UtilityPoint beta = u.points()[uniform_index(rng, u.size())];
    const IndexSpec sum = IndexSpec::arithmetic();
    const InefficiencyReport r = make_report(beta, u, sum);
    expect(r.beta_point == beta, "baseline not echoed");
    expect(r.poa.has_value() && *r.poa == poa_instance(sum, beta, u),
           "ratio differs from the standalone computation");
    expect(r.sdf == sdf_instance(beta, u), "degradation factor differs");
    expect(r.topo == topo_instance(beta, u), "distance differs");
    expect(exact_member(r.sdf_witness, u), "degradation witness not a member");
    expect(exact_member(r.topo_witness, u), "distance witness not a member");
    expect(r.poa_witness.has_value() && exact_member(*r.poa_witness, u),
           "ratio witness not a member");
    const InefficiencyReport bare = make_report(beta, u, std::nullopt);
    expect(!bare.poa.has_value() && !bare.poa_witness.has_value(),
           "ratio must be absent without an index");
  }
  return "report fields match the standalone measures, 50 sets";
}

std::string p_sweep_structure(std::uint64_t) {
  const IndexSpec sum = IndexSpec::arithmetic();
  const std::vector<double> ms = {2.0, 5.0, 10.0};

  const auto nbs_rows =
      sweep_family(SmnObjective::Product, SweepMeasure::Poa, sum, ms, 3, 21);
  expect(nbs_rows.size() == 3, "row count");
  for (std::size_t i = 0; i < nbs_rows.size(); ++i) {
    expect(i == 0 || nbs_rows[i - 1].M < nbs_rows[i].M, "rows not sorted");
    expect(nbs_rows[i].policy == "product", "policy label wrong");
    const SmnFamily family(nbs_rows[i].M, 3);
    expect(rel_near(nbs_rows[i].value, poa_smn_nbs(family), 1e-9),
           "swept value differs from the closed form");
  }

  const auto mm_rows =
      sweep_family(SmnObjective::Min, SweepMeasure::Poa, sum, ms, 3, 21);
  const auto fair_rows = sweep_family(PolicySpec::maxmin_fair(),
                                      SweepMeasure::Poa, sum, ms, 3, 21);
  for (std::size_t i = 0; i < mm_rows.size(); ++i) {
    const SmnFamily family(mm_rows[i].M, 3);
    expect(rel_near(mm_rows[i].value, poa_smn_maxmin(family), 1e-9),
           "equal-share sweep differs from the closed form");
    expect(near(mm_rows[i].value, fair_rows[i].value, 1e-9),
           "leximin policy sweep differs from the closed-form label");
    expect(fair_rows[i].policy == "maxmin-fair", "policy label wrong");
  }

  const auto sdf_rows =
      sweep_family(SmnObjective::Product, SweepMeasure::Sdf, sum, ms, 3, 21);
  const auto topo_rows =
      sweep_family(SmnObjective::Product, SweepMeasure::Topo, sum, ms, 3, 21);
  for (std::size_t i = 0; i < sdf_rows.size(); ++i) {
    expect(near(sdf_rows[i].value, 1.0, 1e-12),
           "saturating baselines cannot be degraded past factor 1");
    expect(near(topo_rows[i].value, 1.0, 1e-12),
           "saturating baselines lie on the front");
  }
  return "three measures, closed-form agreement, ordering, labels";
}

// ------------------------------------------------------------------ demos

std::string p_demos_pass(std::uint64_t) {
  int count = 0;
  for (const auto& [name, run] : demos::registry()) {
    const demos::DemoReport r = run();
    expect(r.name == name, "demo reported a different name than registered");
    expect(r.passed, "demo '" + name + "' failed: " + r.narrative);
    expect(!r.narrative.empty(), "demo '" + name + "' has no narrative");
    ++count;
  }
  return std::to_string(count) + " demos all passed";
}

std::string p_demo_csv_round_trip(std::uint64_t) {
  for (const auto& [name, run] : demos::registry()) {
    const demos::DemoReport r = run();
    for (const auto& [key, table] : r.artifacts) {
      const demos::Table back = io::table_from_csv(io::table_to_csv(table));
      expect(back.columns == table.columns,
             "columns changed through CSV for " + name + "/" + key);
      expect(back.rows == table.rows,
             "values changed through CSV for " + name + "/" + key);
    }
  }
  return "every artifact table survives a CSV cycle bit-exactly";
}

std::string p_jump_needs_switch(std::uint64_t) {
  const demos::DemoReport r = demos::pareto_policy_jump(
      PolicySpec::fixed(UtilityPoint{0.5, 1.5}), 100);
  expect(!r.passed, "a constant selection cannot exhibit a jump");
  return "constant selection correctly reports no jump";
}

std::string p_relaxed_cap_control(std::uint64_t) {
  const demos::DemoReport r = demos::jain_maxmin_flaw(1.0, 201);
  expect(!r.passed,
         "with the cap at the equal split the two criteria coincide");
  return "control case at cap 1 reports no conflict";
}

// --------------------------------------------------------------- registry

struct Property {
  const char* suite;
  const char* name;
  std::string (*fn)(std::uint64_t);
};

const Property kProperties[] = {
    {"utility-model", "hausdorff-metric", p_hausdorff_metric},
    {"utility-model", "dominance-order", p_dominance_order},
    {"utility-model", "grid-nesting", p_grid_nesting},
    {"utility-model", "log-map-round-trip", p_log_map_round_trip},
    {"utility-model", "family-constraint-shape", p_family_constraints},
    {"indexes", "permutation-symmetry", p_permutation_symmetry},
    {"indexes", "spot-values", p_spot_values},
    {"indexes", "fairness-bounds-and-scale", p_jain_bounds},
    {"indexes", "fair-share-consistency", p_fair_share},
    {"indexes", "power-mean-limits", p_power_mean_limits},
    {"indexes", "power-mean-exponent-monotone", p_power_mean_monotone},
    {"indexes", "monotonicity-classification", p_monotonicity_classes},
    {"indexes", "harmonic-domain-guard", p_harmonic_domain},
    {"pareto", "front-members-maximal", p_front_members_maximal},
    {"pareto", "dropped-points-covered", p_dropped_covered},
    {"pareto", "filter-idempotent", p_filter_idempotent},
    {"pareto", "expansion-membership", p_expansion_membership},
    {"pareto", "coverage-of-construction", p_coverage_of_construction},
    {"pareto", "zero-tolerance-full-front", p_zero_tolerance_front},
    {"pareto", "coverage-two-forms", p_coverage_two_forms},
    {"pareto", "construction-compresses", p_construction_compresses},
    {"policies", "pick-is-member-and-argmax", p_pick_member_argmax},
    {"policies", "tiebreak-extremes", p_tiebreak_extremes},
    {"policies", "family-closed-forms-optimal", p_closed_forms_optimal},
    {"policies", "leximin-matches-min-objective", p_leximin_matches_min},
    {"policies", "set-growth-anomaly", p_growth_anomaly},
    {"policies", "objective-growth-along-chains", p_growth_chains},
    {"policies", "cross-index-reversals", p_cross_index_reversals},
    {"policies", "fixed-policy-membership", p_fixed_policy},
    {"inefficiency", "ratio-at-least-one", p_ratio_at_least_one},
    {"inefficiency", "family-ratio-closed-forms", p_family_ratio_closed_forms},
    {"inefficiency", "degradation-lemma-two-sides", p_degradation_two_sides},
    {"inefficiency", "degradation-zero-coordinates", p_degradation_zeros},
    {"inefficiency", "distance-two-routes", p_distance_two_routes},
    {"inefficiency", "distance-expansion-threshold", p_distance_threshold},
    {"inefficiency", "combined-report-consistency", p_report_consistency},
    {"inefficiency", "family-sweep-structure", p_sweep_structure},
    {"demos", "registry-all-pass", p_demos_pass},
    {"demos", "artifact-csv-round-trip", p_demo_csv_round_trip},
    {"demos", "jump-needs-a-switch", p_jump_needs_switch},
    {"demos", "relaxed-cap-control", p_relaxed_cap_control},
};

}  // namespace

std::vector<CheckResult> run_all(std::uint64_t seed) {
  std::vector<CheckResult> results;
  results.reserve(std::size(kProperties));
  std::uint64_t k = 0;
  for (const auto& prop : kProperties) {
    const std::uint64_t sub = seed ^ (0x9E3779B97F4A7C15ULL * ++k);
    CheckResult r{prop.suite, prop.name, false, ""};
    try {
      r.detail = prop.fn(sub);
      r.passed = true;
    } catch (const Failure& f) {
      r.detail = f.message;
    } catch (const std::exception& e) {
      r.detail = std::string("unexpected error: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace pgauge::verify
