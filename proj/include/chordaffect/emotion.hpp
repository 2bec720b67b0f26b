/// @file
/// @brief Generic goal-function emotion power, Pwe = k * log(R1 / R0).
///
/// The need-strength factor that multiplies Pwe is taken as 1. The chord
/// formula in affect.hpp is this function with R0 = 1 and R1 the geometric
/// mean of the main proportion's terms.

#pragma once

#include <cmath>

#include "chordaffect/errors.hpp"

namespace chordaffect {

struct GoalSample {
  double r0 = 1.0;    ///< prior value of the integral resource
  double r1 = 1.0;    ///< current value
  double gain = 1.0;  ///< k
};

/// k * log2(r1 / r0): positive when the resource grew, negative when it shrank.
inline double utilitarian_power(const GoalSample& s) {
  if (!(s.r0 > 0.0) || !(s.r1 > 0.0) || !(s.gain > 0.0)) {
    throw InputError("goal sample values and gain must be positive");
  }
  return s.gain * (std::log2(s.r1) - std::log2(s.r0));
}

}  // namespace chordaffect
