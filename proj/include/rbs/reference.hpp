#pragma once

#include <string>
#include <vector>

namespace rbs {

// One reproduction check: a named comparison of engine output against the
// published tables for the rank-2 worked example and the supporting
// structural facts. detail carries expected/actual on failure.
struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// The full reproduction suite. Deterministic and self-contained.
std::vector<CheckResult> reference_checks();

}  // namespace rbs
