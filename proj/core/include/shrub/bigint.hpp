#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace shrub {

// Exact nonnegative counts of unbounded size. Decimal serialization
// round-trips through to_string/BigCount(string).
using BigCount = boost::multiprecision::cpp_int;

// Exact rationals for the root-isolation arithmetic.
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigCount& v) { return v.str(); }

}  // namespace shrub
