/// @file
/// @brief One-call analysis of a chord: writings, products, power, consonance.

#pragma once

#include <optional>
#include <vector>

#include "chordaffect/affect.hpp"
#include "chordaffect/consonance.hpp"
#include "chordaffect/proportion.hpp"

namespace chordaffect {

struct ChordAnalysis {
  Proportion proportion;
  std::vector<std::uint64_t> inverse_terms;
  ProportionProducts products;
  PowerReport power;
  std::optional<ChordConsonance> consonance;  ///< absent for a single voice
};

inline ChordAnalysis analyze_chord(const Proportion& p, const PowerOptions& opt = {}) {
  ChordAnalysis a{p, inverse_numbers(p), chordaffect::products(p), emotional_power(p, opt),
                  std::nullopt};
  if (p.voices() >= 2) a.consonance = chord_consonance(p);
  return a;
}

}  // namespace chordaffect
