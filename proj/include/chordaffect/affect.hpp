/// @file
/// @brief Major/minor/symmetric classification and signed emotional power.
///
/// The power of a chord is the (scaled) log of the geometric mean of the
/// terms of its main proportion, the writing (direct or inverse) with the
/// smaller product:
///
///     Pwe = k * (1/M) * log_b(n1 * n2 * ... * nM)
///
/// with k = 1 and b = 2 by default. Major chords (direct writing simpler)
/// get a positive sign and minor chords a negative one.

#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "chordaffect/errors.hpp"
#include "chordaffect/proportion.hpp"

namespace chordaffect {

enum class Classification { Major, Minor, Symmetric };

enum class SaturationBand { Nominal, Saturating, OutOfRange };

inline std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Major: return "major";
    case Classification::Minor: return "minor";
    case Classification::Symmetric: return "symmetric";
  }
  return "?";
}

inline std::string_view to_string(SaturationBand b) {
  switch (b) {
    case SaturationBand::Nominal: return "nominal";
    case SaturationBand::Saturating: return "saturating";
    case SaturationBand::OutOfRange: return "out_of_range";
  }
  return "?";
}

struct PowerOptions {
  double gain = 1.0;      ///< k
  double log_base = 2.0;
  /// Main and side amplitudes closer than this are treated as symmetric.
  double near_symmetry_threshold = 0.50;
  double saturation_start = 2.4;
  double saturation_limit = 3.0;
};

struct PowerReport {
  Classification classification = Classification::Symmetric;
  double pwe_main = 0.0;
  double pwe_side = 0.0;
  double pwe_adjusted = 0.0;
  bool near_symmetric = true;
  bool valence_valid = false;  ///< utilitarian valence needs M >= 3
  SaturationBand band = SaturationBand::Nominal;
};

inline Classification classify(const ProportionProducts& pp) {
  if (pp.direct < pp.inverse) return Classification::Major;
  if (pp.direct > pp.inverse) return Classification::Minor;
  return Classification::Symmetric;
}

inline Classification classify(const Proportion& p) { return classify(products(p)); }

inline SaturationBand saturation_band(double amplitude, const PowerOptions& opt = {}) {
  if (!(amplitude >= 0.0)) throw InputError("power amplitude must be non-negative");
  if (amplitude < opt.saturation_start) return SaturationBand::Nominal;
  if (amplitude <= opt.saturation_limit) return SaturationBand::Saturating;
  return SaturationBand::OutOfRange;
}

namespace detail {

template <class Range>
double mean_log2(const Range& terms) {
  double sum = 0.0;
  std::size_t n = 0;
  for (auto t : terms) {
    sum += std::log2(static_cast<double>(t));
    ++n;
  }
  return sum / static_cast<double>(n);
}

}  // namespace detail

inline PowerReport emotional_power(const Proportion& p, const PowerOptions& opt = {}) {
  if (!(opt.gain > 0.0) || !(opt.log_base > 1.0)) {
    throw InputError("power gain must be positive and log base greater than 1");
  }
  const double scale = opt.gain / std::log2(opt.log_base);
  const double direct = scale * detail::mean_log2(p.terms());
  const double inverse = scale * detail::mean_log2(inverse_numbers(p));

  PowerReport r;
  r.classification = classify(p);
  switch (r.classification) {
    case Classification::Major:
      r.pwe_main = direct;
      r.pwe_side = -inverse;
      break;
    case Classification::Minor:
      r.pwe_main = -inverse;
      r.pwe_side = direct;
      break;
    case Classification::Symmetric:
      r.pwe_main = direct;
      r.pwe_side = -direct;
      break;
  }
  const double gap = std::abs(r.pwe_side) - std::abs(r.pwe_main);
  r.near_symmetric =
      r.classification == Classification::Symmetric || gap < opt.near_symmetry_threshold;
  if (r.classification == Classification::Symmetric) {
    r.pwe_adjusted = 0.0;
  } else if (r.near_symmetric) {
    r.pwe_adjusted = (r.pwe_main + r.pwe_side) / 2.0;
  } else {
    r.pwe_adjusted = r.pwe_main;
  }
  r.valence_valid = p.voices() >= 3;
  r.band = saturation_band(std::abs(r.pwe_main), opt);
  return r;
}

}  // namespace chordaffect
