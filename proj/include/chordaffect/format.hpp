/// @file
/// @brief Small number/text formatting helpers shared by the emitters.

#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace chordaffect {

/// Fixed-point with `decimals` places; never prints "-0.00".
inline std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

/// Rounds to `decimals` places, for emitting through JSON number writers.
inline double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double r = std::round(value * scale) / scale;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace chordaffect
