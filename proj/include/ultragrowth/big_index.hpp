#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ultragrowth {

/// Unbounded nonnegative index. Oscillator anchors grow like Q^(n_1+...+n_j)
/// and leave the 64-bit range after a handful of stages.
using BigIndex = boost::multiprecision::cpp_int;

/// Natural logarithm of a positive index, exact to double precision for any
/// magnitude (no overflow through an intermediate double conversion).
double log_of(const BigIndex& k);

/// Nearest double; +inf beyond the double range.
double to_double(const BigIndex& k);

/// Largest BigIndex not exceeding x (x >= 0, finite).
BigIndex floor_to_index(double x);

BigIndex ipow(unsigned base, unsigned exponent);

std::string to_string(const BigIndex& k);

}  // namespace ultragrowth
