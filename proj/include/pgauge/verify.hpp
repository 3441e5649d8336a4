#ifndef PGAUGE_VERIFY_HPP
#define PGAUGE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pgauge::verify {

/// One named property check. `detail` explains a failure (or adds a
/// short note on success).
struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Run every registered property of every module, in fixed declaration
/// order, with per-property sub-seeds derived from `seed`. Pure
/// computation: nothing is printed.
std::vector<CheckResult> run_all(std::uint64_t seed);

}  // namespace pgauge::verify

#endif  // PGAUGE_VERIFY_HPP
