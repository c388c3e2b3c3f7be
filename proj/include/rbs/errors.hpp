#pragma once

#include <stdexcept>
#include <string>

namespace rbs {

// Rejected input: malformed labels, violated preconditions, inconsistent
// configuration. The CLI maps this to exit code 2.
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal consistency check (a bug in the engine, not user error).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invalid_input(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) throw internal_error("internal check failed: " + msg);
}

}  // namespace rbs
