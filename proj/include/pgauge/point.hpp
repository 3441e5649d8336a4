#ifndef PGAUGE_POINT_HPP
#define PGAUGE_POINT_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pgauge {

/// Absolute tolerance for membership and containment tests.
/// Dominance comparisons are always exact on the given floats.
inline constexpr double kTol = 1e-9;

/// Metric used for point-to-point distances (Hausdorff, expansions).
enum class Metric { LInf, L2, L1 };

/**
 * A joint utility vector: one nonnegative coordinate per player.
 *
 * Invariants: at least one coordinate, every coordinate >= 0.
 * Immutable after construction.
 */
class UtilityPoint {
 public:
  explicit UtilityPoint(std::vector<double> coords);
  UtilityPoint(std::initializer_list<double> coords);

  [[nodiscard]] const std::vector<double>& coords() const { return coords_; }
  [[nodiscard]] std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t k) const { return coords_[k]; }

  [[nodiscard]] bool all_positive() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const UtilityPoint&, const UtilityPoint&) = default;

 private:
  std::vector<double> coords_;
};

/// True iff every coordinate of u is at most the matching coordinate of v,
/// i.e. v is componentwise at least as good as u.
bool dominates(const UtilityPoint& u, const UtilityPoint& v);

/// True iff every coordinate of v strictly exceeds that of u.
bool strictly_dominated_by_all_coords(const UtilityPoint& u,
                                      const UtilityPoint& v);

/// True iff u is componentwise <= v and differs from v somewhere.
bool pareto_less(const UtilityPoint& u, const UtilityPoint& v);

double distance(const std::vector<double>& a, const std::vector<double>& b,
                Metric m = Metric::LInf);
double distance(const UtilityPoint& a, const UtilityPoint& b,
                Metric m = Metric::LInf);

/// Lexicographic order on coordinate vectors (used for tie-breaking).
bool lex_less(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace pgauge

#endif  // PGAUGE_POINT_HPP
