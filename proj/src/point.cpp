#include "pgauge/point.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pgauge {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

}  // namespace

UtilityPoint::UtilityPoint(std::vector<double> coords)
    : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw std::invalid_argument("utility point needs at least one coordinate");
  }
  for (double c : coords_) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument(
          "utility point coordinates must be finite and nonnegative, got " +
          std::to_string(c));
    }
  }
}

UtilityPoint::UtilityPoint(std::initializer_list<double> coords)
    : UtilityPoint(std::vector<double>(coords)) {}

bool UtilityPoint::all_positive() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](double c) { return c > 0.0; });
}

bool UtilityPoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](double c) { return c == 0.0; });
}

std::string UtilityPoint::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k > 0) out << ", ";
    out << coords_[k];
  }
  out << ')';
  return out.str();
}

bool dominates(const UtilityPoint& u, const UtilityPoint& v) {
  require_same_dim(u.dim(), v.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) {
    if (u[k] > v[k]) return false;
  }
  return true;
}

bool strictly_dominated_by_all_coords(const UtilityPoint& u,
                                      const UtilityPoint& v) {
  require_same_dim(u.dim(), v.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) {
    if (u[k] >= v[k]) return false;
  }
  return true;
}

bool pareto_less(const UtilityPoint& u, const UtilityPoint& v) {
  return dominates(u, v) && u != v;
}

double distance(const std::vector<double>& a, const std::vector<double>& b,
                Metric m) {
  require_same_dim(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = std::abs(a[k] - b[k]);
    switch (m) {
      case Metric::LInf:
        acc = std::max(acc, d);
        break;
      case Metric::L2:
        acc += d * d;
        break;
      case Metric::L1:
        acc += d;
        break;
    }
  }
  return m == Metric::L2 ? std::sqrt(acc) : acc;
}

double distance(const UtilityPoint& a, const UtilityPoint& b, Metric m) {
  return distance(a.coords(), b.coords(), m);
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace pgauge
