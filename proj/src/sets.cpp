#include "pgauge/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pgauge {

namespace {

constexpr int kProbeResolution = 8;

// Enumerate the uniform grid with `resolution` points per axis over
// [0, box_1] x ... x [0, box_n], calling fn on each point.
template <typename Fn>
void for_each_grid_point(const std::vector<double>& box, int resolution,
                         Fn&& fn) {
  const std::size_t n = box.size();
  std::vector<int> digit(n, 0);
  std::vector<double> point(n, 0.0);
  while (true) {
    for (std::size_t k = 0; k < n; ++k) {
      point[k] = box[k] * digit[k] / (resolution - 1);
    }
    fn(point);
    std::size_t k = 0;
    while (k < n && ++digit[k] == resolution) {
      digit[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
}

}  // namespace

FiniteUtilitySet::FiniteUtilitySet(std::vector<UtilityPoint> points)
    : points_(std::move(points)) {
  if (points_.empty()) {
    throw std::invalid_argument("utility set must be nonempty");
  }
  const std::size_t d = points_.front().dim();
  for (const auto& p : points_) {
    if (p.dim() != d) {
      throw std::invalid_argument(
          "utility set points must share one dimension");
    }
  }
}

bool FiniteUtilitySet::contains(const UtilityPoint& p, double tol) const {
  if (p.dim() != dim()) return false;
  for (const auto& q : points_) {
    if (distance(p, q, Metric::LInf) <= tol) return true;
  }
  return false;
}

bool FiniteUtilitySet::same_points(const FiniteUtilitySet& other) const {
  if (dim() != other.dim()) return false;
  auto covered = [](const FiniteUtilitySet& a, const FiniteUtilitySet& b) {
    return std::all_of(a.points().begin(), a.points().end(),
                       [&](const UtilityPoint& p) {
                         return std::find(b.points().begin(),
                                          b.points().end(),
                                          p) != b.points().end();
                       });
  };
  return covered(*this, other) && covered(other, *this);
}

HalfspaceSet::HalfspaceSet(std::size_t n,
                           std::vector<LinearConstraint> constraints)
    : n_(n), constraints_(std::move(constraints)) {
  if (n_ == 0) throw std::invalid_argument("halfspace set needs n >= 1");
  if (constraints_.empty()) {
    throw std::invalid_argument("halfspace set needs at least one constraint");
  }
  for (const auto& c : constraints_) {
    if (c.weights.size() != n_) {
      throw std::invalid_argument(
          "constraint weight vector length must equal n");
    }
  }

  // Bounding-box probe. An axis is capped when some constraint with all
  // nonnegative weights charges it a positive weight; otherwise nothing
  // in the system stops that coordinate from growing.
  box_.assign(n_, std::numeric_limits<double>::infinity());
  for (const auto& c : constraints_) {
    const bool all_nonneg = std::all_of(c.weights.begin(), c.weights.end(),
                                        [](double w) { return w >= 0.0; });
    if (!all_nonneg) continue;
    for (std::size_t k = 0; k < n_; ++k) {
      if (c.weights[k] > 0.0) {
        box_[k] = std::min(box_[k], c.bound / c.weights[k]);
      }
    }
  }
  for (std::size_t k = 0; k < n_; ++k) {
    if (!std::isfinite(box_[k])) {
      throw std::invalid_argument("unbounded set: axis " + std::to_string(k) +
                                  " has no bounding constraint");
    }
    if (box_[k] < 0.0) {
      throw std::invalid_argument("empty set: axis " + std::to_string(k) +
                                  " has a negative upper bound");
    }
  }

  bool found = false;
  for_each_grid_point(box_, kProbeResolution, [&](const std::vector<double>& p) {
    found = found || feasible(p);
  });
  if (!found) {
    throw std::invalid_argument(
        "empty set: bounding-box probe found no feasible point");
  }
}

bool HalfspaceSet::feasible(const std::vector<double>& u, double tol) const {
  if (u.size() != n_) {
    throw std::invalid_argument("feasibility query has wrong dimension");
  }
  for (const auto& c : constraints_) {
    double lhs = 0.0;
    for (std::size_t k = 0; k < n_; ++k) lhs += c.weights[k] * u[k];
    if (lhs > c.bound + tol) return false;
  }
  return true;
}

bool HalfspaceSet::feasible(const UtilityPoint& u, double tol) const {
  return feasible(u.coords(), tol);
}

SmnFamily::SmnFamily(double M, int N) : m_(M), n_(N) {
  if (!(M > 0.0) || !std::isfinite(M)) {
    throw std::invalid_argument("S_{M,N} needs M > 0");
  }
  if (N < 2) throw std::invalid_argument("S_{M,N} needs N >= 2");
}

double hausdorff(const FiniteUtilitySet& a, const FiniteUtilitySet& b,
                 Metric m) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("hausdorff: sets have different dimensions");
  }
  auto directed = [m](const FiniteUtilitySet& from, const FiniteUtilitySet& to) {
    double worst = 0.0;
    for (const auto& p : from.points()) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to.points()) {
        best = std::min(best, distance(p, q, m));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

FiniteUtilitySet discretize(const HalfspaceSet& h, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("discretize needs resolution >= 2");
  }
  std::vector<UtilityPoint> kept;
  for_each_grid_point(h.bounding_box(), resolution,
                      [&](const std::vector<double>& p) {
                        if (h.feasible(p)) kept.emplace_back(p);
                      });
  if (kept.empty()) {
    throw std::invalid_argument(
        "discretize produced an empty set; resolution too coarse");
  }
  return FiniteUtilitySet(std::move(kept));
}

HalfspaceSet smn_halfspaces(const SmnFamily& family) {
  const std::size_t n = static_cast<std::size_t>(family.N());
  std::vector<double> weights(n, 1.0);
  weights[0] = 1.0 / family.M();
  return HalfspaceSet(n, {{std::move(weights), 1.0}});
}

std::vector<std::vector<double>> log_map(const FiniteUtilitySet& u) {
  std::vector<std::vector<double>> out;
  out.reserve(u.size());
  for (const auto& p : u.points()) {
    std::vector<double> logs(p.dim());
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (!(p[k] > 0.0)) {
        throw std::domain_error("log_map: nonpositive coordinate in point " +
                                p.to_string());
      }
      logs[k] = std::log(p[k]);
    }
    out.push_back(std::move(logs));
  }
  return out;
}

}  // namespace pgauge
