#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "rbs/errors.hpp"

namespace rbs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Int as_integer(const Rat& q) {
  check_internal(is_integer(q), "rational is not an integer");
  return boost::multiprecision::numerator(q);
}

}  // namespace rbs
