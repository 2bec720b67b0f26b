/// @file
/// @brief Interval consonance ranking and chord consonance verdicts.
///
/// Consonances, most consonant first: 1/1, 2/1, 3/2, 4/3, 5/4, 8/5, 6/5, 5/3.
/// Listed dissonances: 9/5, 9/8, 7/5, 15/8, 16/15. Anything else (7/4, 7/6,
/// 9/7, ...) counts as an unlisted dissonance. Ratios are octave-reduced
/// into [1, 2] before lookup.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "chordaffect/errors.hpp"
#include "chordaffect/proportion.hpp"
#include "chordaffect/rational.hpp"

namespace chordaffect {

enum class Verdict { Consonant, DissonantListed, DissonantUnlisted };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Consonant: return "consonant";
    case Verdict::DissonantListed: return "dissonant";
    case Verdict::DissonantUnlisted: return "dissonant_unlisted";
  }
  return "?";
}

inline constexpr std::array<std::pair<std::uint64_t, std::uint64_t>, 8> kConsonances{{
    {1, 1}, {2, 1}, {3, 2}, {4, 3}, {5, 4}, {8, 5}, {6, 5}, {5, 3}}};

inline constexpr std::array<std::pair<std::uint64_t, std::uint64_t>, 5> kDissonances{{
    {9, 5}, {9, 8}, {7, 5}, {15, 8}, {16, 15}}};

struct IntervalQuality {
  Rational ratio;    ///< as given
  Rational reduced;  ///< octave-reduced into [1, 2]
  Verdict verdict = Verdict::DissonantUnlisted;
  std::optional<int> rank;  ///< 0 (unison) .. 7 for consonances

  bool consonant() const noexcept { return verdict == Verdict::Consonant; }
};

/// Divides by 2 until the ratio lies in [1, 2].
inline Rational octave_reduce(Rational r) {
  if (r < Rational(1)) throw InputError("interval ratio must be >= 1");
  const Rational two(2);
  while (r > two) r = r / two;
  return r;
}

inline IntervalQuality interval_quality(const Rational& r) {
  IntervalQuality q{r, octave_reduce(r), Verdict::DissonantUnlisted, std::nullopt};
  for (std::size_t i = 0; i < kConsonances.size(); ++i) {
    if (q.reduced == Rational(kConsonances[i].first, kConsonances[i].second)) {
      q.verdict = Verdict::Consonant;
      q.rank = static_cast<int>(i);
      return q;
    }
  }
  for (const auto& [n, d] : kDissonances) {
    if (q.reduced == Rational(n, d)) {
      q.verdict = Verdict::DissonantListed;
      return q;
    }
  }
  return q;
}

struct PairQuality {
  std::size_t lower = 0;  ///< voice index
  std::size_t upper = 0;
  IntervalQuality quality;
};

struct ChordConsonance {
  bool consonant = true;
  std::vector<PairQuality> pairs;  ///< every (i, j), i < j, row-major
};

inline ChordConsonance chord_consonance(const Proportion& p) {
  if (p.voices() < 2) throw InputError("consonance needs at least two voices");
  ChordConsonance out;
  const auto t = p.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      auto q = interval_quality(Rational(t[j], t[i]));
      out.consonant = out.consonant && q.consonant();
      out.pairs.push_back({i, j, std::move(q)});
    }
  }
  return out;
}

inline bool chord_consonant(const Proportion& p) { return chord_consonance(p).consonant; }

}  // namespace chordaffect
