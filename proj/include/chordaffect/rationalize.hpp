/// @file
/// @brief Turning measured pitches into small-integer proportions.
///
/// Frequencies, 12-TET semitone offsets and note names all reduce to a list
/// of frequencies; `rationalize` then searches for the simplest proportion
/// whose every pairwise ratio lies within a relative tolerance of the input's.
///
/// Search: for each lowest term a1 = 1..max_term the remaining terms are
/// enumerated inside their tolerance windows (a handful of integers each),
/// pruning on pairwise error as voices are added. The same search runs on the
/// reciprocal pitches so that chords whose inverse writing is small (e.g.
/// /4:/5:/6) are candidates as well; the candidate set is therefore closed
/// under mirroring.
///
/// Ranking, smallest first: max(p_dir, p_inv), min(p_dir, p_inv), worst
/// pairwise error, p_dir, then the terms lexicographically. The first key
/// favours chords whose two writings are both simple, which resolves the
/// equal-tempered augmented triad to 16:20:25.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chordaffect/errors.hpp"
#include "chordaffect/proportion.hpp"

namespace chordaffect {

struct RationalizeConfig {
  double tolerance = 0.01;       ///< relative error bound on every pairwise ratio
  std::uint64_t max_term = 64;   ///< bound on the terms of the simpler writing
  std::size_t max_voices = 8;

  void validate() const {
    if (!(tolerance > 0.0 && tolerance < 0.06)) {
      throw InputError("tolerance must lie in (0, 0.06)");
    }
    if (max_term < 2) throw InputError("max_term must be at least 2");
    if (max_voices < 1) throw InputError("max_voices must be at least 1");
  }
};

struct Rationalization {
  Proportion proportion;
  double max_error = 0.0;  ///< worst pairwise relative ratio error
  /// The winner's mirror ranked exactly equal; only possible when the input
  /// is (numerically) its own mirror, e.g. stacked equal intervals.
  bool mirror_tie = false;
};

/// Relative deviation |candidate/target - 1| of one ratio.
inline double ratio_error(double candidate, double target) {
  return std::abs(candidate / target - 1.0);
}

namespace detail {

/// Pairwise ratios f_j / f_i (i < j) of ascending frequencies.
class RatioTable {
 public:
  explicit RatioTable(std::span<const double> sorted_freqs) : m_(sorted_freqs.size()) {
    r_.resize(m_ * m_, 1.0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        r_[i * m_ + j] = sorted_freqs[j] / sorted_freqs[i];
      }
    }
  }

  std::size_t voices() const noexcept { return m_; }
  double at(std::size_t i, std::size_t j) const { return r_[i * m_ + j]; }

  /// Table of the reciprocal pitches: voice k becomes voice M-1-k. Built by
  /// index permutation so both tables hold bit-identical ratios.
  RatioTable reversed() const {
    RatioTable out(*this);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        out.r_[i * m_ + j] = at(m_ - 1 - j, m_ - 1 - i);
      }
    }
    return out;
  }

  /// Worst pairwise error of `terms` against this table.
  double error(std::span<const std::uint64_t> terms) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        const double c = static_cast<double>(terms[j]) / static_cast<double>(terms[i]);
        worst = std::max(worst, ratio_error(c, at(i, j)));
      }
    }
    return worst;
  }

 private:
  std::size_t m_;
  std::vector<double> r_;
};

/// Calls `emit(terms)` for every ascending coprime tuple with terms <=
/// max_term whose pairwise ratios all fit the table within tolerance.
template <class Emit>
void enumerate_candidates(const RatioTable& table, double tol, std::uint64_t max_term,
                          Emit&& emit) {
  const std::size_t m = table.voices();
  std::vector<std::uint64_t> terms(m, 0);

  auto fits = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      const double c = static_cast<double>(terms[k]) / static_cast<double>(terms[i]);
      if (ratio_error(c, table.at(i, k)) > tol) return false;
    }
    return true;
  };

  auto descend = [&](auto&& self, std::size_t k) -> void {
    if (k == m) {
      std::uint64_t g = 0;
      for (auto t : terms) g = std::gcd(g, t);
      if (g == 1) emit(std::span<const std::uint64_t>(terms));
      return;
    }
    const double centre = static_cast<double>(terms[0]) * table.at(0, k);
    // One unit of slack on each side; `fits` makes the exact decision.
    const double lo_f = std::floor(centre * (1.0 - tol)) - 1.0;
    const double hi_f = std::ceil(centre * (1.0 + tol)) + 1.0;
    const std::uint64_t lo = std::max<std::uint64_t>(
        terms[k - 1], lo_f < 1.0 ? 1 : static_cast<std::uint64_t>(lo_f));
    const std::uint64_t hi =
        hi_f > static_cast<double>(max_term) ? max_term : static_cast<std::uint64_t>(hi_f);
    for (std::uint64_t v = lo; v <= hi; ++v) {
      terms[k] = v;
      if (fits(k)) self(self, k + 1);
    }
  };

  for (std::uint64_t first = 1; first <= max_term; ++first) {
    terms[0] = first;
    descend(descend, 1);
  }
}

struct RankKey {
  BigInt complex;  // max(p_dir, p_inv)
  BigInt simple;   // min(p_dir, p_inv)
  std::int64_t error_q = 0;

  friend bool operator==(const RankKey&, const RankKey&) = default;
  friend auto operator<=>(const RankKey& a, const RankKey& b) {
    if (a.complex != b.complex) return a.complex < b.complex ? -1 : 1;
    if (a.simple != b.simple) return a.simple < b.simple ? -1 : 1;
    if (a.error_q != b.error_q) return a.error_q < b.error_q ? -1 : 1;
    return 0;
  }
};

inline RankKey rank_key(const Proportion& p, double error) {
  const auto pp = products(p);
  RankKey k;
  k.complex = pp.direct < pp.inverse ? pp.inverse : pp.direct;
  k.simple = pp.direct < pp.inverse ? pp.direct : pp.inverse;
  // Errors equal to ~1e-12 count as ties so mirrored inputs rank alike.
  k.error_q = std::llround(error * 1e12);
  return k;
}

}  // namespace detail

inline void validate_frequencies(std::span<const double> freqs, std::size_t max_voices) {
  if (freqs.empty()) throw InputError("at least one frequency is required");
  if (freqs.size() > max_voices) {
    throw InputError("too many voices: " + std::to_string(freqs.size()) + " > " +
                     std::to_string(max_voices));
  }
  for (double f : freqs) {
    if (!(f > 0.0) || !std::isfinite(f)) throw InputError("frequencies must be positive");
  }
}

/// Full search result; throws NoProportionFound when nothing fits.
inline Rationalization rationalize_detailed(std::span<const double> freqs,
                                            const RationalizeConfig& cfg = {}) {
  cfg.validate();
  validate_frequencies(freqs, cfg.max_voices);
  std::vector<double> sorted(freqs.begin(), freqs.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() == 1) return {Proportion(), 0.0, false};

  const detail::RatioTable table(sorted);
  std::optional<detail::RankKey> best;
  std::vector<std::pair<Proportion, double>> tied;

  auto offer = [&](const Proportion& p) {
    const double err = table.error(p.terms());
    auto key = detail::rank_key(p, err);
    if (!best || key < *best) {
      best = std::move(key);
      tied.clear();
      tied.emplace_back(p, err);
    } else if (key == *best) {
      if (std::none_of(tied.begin(), tied.end(), [&](const auto& t) { return t.first == p; })) {
        tied.emplace_back(p, err);
      }
    }
  };

  detail::enumerate_candidates(table, cfg.tolerance, cfg.max_term,
                               [&](std::span<const std::uint64_t> t) {
                                 offer(Proportion::from_terms(t));
                               });
  detail::enumerate_candidates(table.reversed(), cfg.tolerance, cfg.max_term,
                               [&](std::span<const std::uint64_t> t) {
                                 offer(mirror(Proportion::from_terms(t)));
                               });

  if (!best) {
    throw NoProportionFound("no proportion with terms <= " + std::to_string(cfg.max_term) +
                            " within tolerance " + std::to_string(cfg.tolerance));
  }
  std::sort(tied.begin(), tied.end(), [](const auto& a, const auto& b) {
    const auto pa = products(a.first).direct;
    const auto pb = products(b.first).direct;
    if (pa != pb) return pa < pb;
    return a.first < b.first;
  });
  Rationalization out{tied.front().first, tied.front().second, false};
  const Proportion m = mirror(out.proportion);
  out.mirror_tie = m != out.proportion &&
                   std::any_of(tied.begin(), tied.end(),
                               [&](const auto& t) { return t.first == m; });
  return out;
}

inline Proportion rationalize(std::span<const double> freqs, const RationalizeConfig& cfg = {}) {
  return rationalize_detailed(freqs, cfg).proportion;
}

/// f_i = root * 2^(offset_i / 12)
inline std::vector<double> semitones_to_freqs(std::span<const double> offsets, double root) {
  if (!(root > 0.0) || !std::isfinite(root)) throw InputError("root frequency must be positive");
  std::vector<double> out;
  out.reserve(offsets.size());
  for (double s : offsets) {
    if (!std::isfinite(s)) throw InputError("semitone offsets must be finite");
    out.push_back(root * std::exp2(s / 12.0));
  }
  return out;
}

/// 12-TET frequency of a note name such as "A4", "C#3", "Eb-1" (A4 = 440 Hz).
inline double parse_pitch(std::string_view name) {
  static constexpr int kLetterSemitone[7] = {9, 11, 0, 2, 4, 5, 7};  // A..G from C
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> double {
    throw ParseError(what + " in pitch name '" + std::string(name) + "'", pos);
  };

  if (pos >= name.size()) return fail("missing note letter");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[pos])));
  if (letter < 'A' || letter > 'G') return fail("expected note letter A-G");
  int semitone = kLetterSemitone[letter - 'A'];
  ++pos;

  if (pos < name.size() && (name[pos] == '#' || name[pos] == 'b')) {
    semitone += name[pos] == '#' ? 1 : -1;
    ++pos;
  }

  bool negative = false;
  if (pos < name.size() && name[pos] == '-') {
    negative = true;
    ++pos;
  }
  if (pos >= name.size() || !std::isdigit(static_cast<unsigned char>(name[pos]))) {
    return fail("expected octave number");
  }
  const int octave_digit = name[pos] - '0';
  ++pos;
  if (pos != name.size()) return fail("unexpected trailing character");
  const int octave = negative ? -octave_digit : octave_digit;
  if (octave < -1 || octave > 9) {
    pos = negative ? pos - 2 : pos - 1;
    return fail("octave out of range -1..9");
  }

  const int midi = (octave + 1) * 12 + semitone;
  return 440.0 * std::exp2((midi - 69) / 12.0);
}

}  // namespace chordaffect
