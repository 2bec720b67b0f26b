/// @file
/// @brief Reference table of main/side powers for a standard chord list.
///
/// Rows are grouped as symmetric chords, consonant triads, dissonant triads
/// and consonant four-voice chords. Each row shows the chord as written, its
/// other writing, the main power and, when the side power is within 0.6 of
/// it in amplitude, the side power in parentheses.

#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "chordaffect/affect.hpp"
#include "chordaffect/format.hpp"
#include "chordaffect/proportion_text.hpp"

namespace chordaffect {

enum class AppendixSection { Symmetric, ConsonantTriads, DissonantTriads, ConsonantTetrads };

inline std::string_view to_string(AppendixSection s) {
  switch (s) {
    case AppendixSection::Symmetric: return "symmetric chords";
    case AppendixSection::ConsonantTriads: return "consonant three-voice chords";
    case AppendixSection::DissonantTriads: return "dissonant triads";
    case AppendixSection::ConsonantTetrads: return "consonant four-voice chords";
  }
  return "?";
}

struct AppendixRow {
  AppendixSection section;
  std::string_view text;  ///< as written, "4:5:6" or "/4:/5:/6"
};

inline constexpr std::array<AppendixRow, 28> kAppendixRows{{
    {AppendixSection::Symmetric, "1:1:1"},
    {AppendixSection::Symmetric, "1:2:4"},
    {AppendixSection::Symmetric, "4:6:9"},
    {AppendixSection::Symmetric, "16:20:25"},
    {AppendixSection::ConsonantTriads, "1:2:3"},
    {AppendixSection::ConsonantTriads, "2:3:4"},
    {AppendixSection::ConsonantTriads, "2:3:5"},
    {AppendixSection::ConsonantTriads, "2:3:8"},
    {AppendixSection::ConsonantTriads, "2:4:5"},
    {AppendixSection::ConsonantTriads, "2:5:6"},
    {AppendixSection::ConsonantTriads, "2:5:8"},
    {AppendixSection::ConsonantTriads, "3:4:5"},
    {AppendixSection::ConsonantTriads, "/3:/4:/5"},
    {AppendixSection::ConsonantTriads, "3:4:6"},
    {AppendixSection::ConsonantTriads, "3:4:8"},
    {AppendixSection::ConsonantTriads, "3:5:6"},
    {AppendixSection::ConsonantTriads, "3:5:8"},
    {AppendixSection::ConsonantTriads, "3:6:8"},
    {AppendixSection::ConsonantTriads, "4:5:6"},
    {AppendixSection::ConsonantTriads, "/4:/5:/6"},
    {AppendixSection::ConsonantTriads, "4:5:8"},
    {AppendixSection::ConsonantTriads, "5:6:8"},
    {AppendixSection::DissonantTriads, "4:5:7"},
    {AppendixSection::DissonantTriads, "5:6:7"},
    {AppendixSection::ConsonantTetrads, "1:2:3:4"},
    {AppendixSection::ConsonantTetrads, "2:3:4:5"},
    {AppendixSection::ConsonantTetrads, "3:4:5:6"},
    {AppendixSection::ConsonantTetrads, "4:5:6:8"},
}};

/// Side power is printed when its amplitude exceeds the main one by at most this.
inline constexpr double kSidePowerShownWithin = 0.6;

/// The chord's other writing, terms kept in the order written:
/// "4:5:6" -> "/15:/12:/10", "/3:/4:/5" -> "20:15:12". Unit terms drop the slash.
inline std::string other_writing(std::string_view text) {
  const auto terms = parse_proportion_terms(text);
  std::uint64_t common_den = 1;
  for (const auto& r : terms) common_den = checked_lcm(common_den, r.den());
  std::vector<std::uint64_t> values;
  std::uint64_t g = 0;
  for (const auto& r : terms) {
    values.push_back(checked_mul(r.num(), common_den / r.den()));
    g = std::gcd(g, values.back());
  }
  for (auto& v : values) v /= g;

  const bool reciprocal = is_reciprocal_text(text);
  std::uint64_t l = 1;
  for (auto v : values) l = checked_lcm(l, v);
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ':';
    if (reciprocal) {
      out += std::to_string(values[i]);
    } else {
      const auto d = l / values[i];
      if (d != 1) out += '/';
      out += std::to_string(d);
    }
  }
  return out;
}

inline std::string power_cell(const PowerReport& r) {
  std::string s = format_fixed(r.pwe_main, 2);
  if (std::abs(r.pwe_side) - std::abs(r.pwe_main) <= kSidePowerShownWithin) {
    s += " (" + format_fixed(r.pwe_side, 2) + ")";
  }
  return s;
}

inline std::string symmetry_note(const PowerReport& r) {
  if (r.classification == Classification::Symmetric) return "symmetric";
  if (r.near_symmetric) return "nearly symmetric";
  return "";
}

/// Tab-separated table with "# section" headings.
inline std::string appendix_table(const PowerOptions& opt = {}) {
  std::string out = "# main\tother\tpwe main (side)\tnote\n";
  bool first = true;
  AppendixSection current{};
  for (const auto& row : kAppendixRows) {
    if (first || row.section != current) {
      out += "\n# " + std::string(to_string(row.section)) + "\n";
      current = row.section;
      first = false;
    }
    const auto report = emotional_power(parse_proportion(row.text), opt);
    out += std::string(row.text) + '\t' + other_writing(row.text) + '\t' + power_cell(report) +
           '\t' + symmetry_note(report) + '\n';
  }
  return out;
}

}  // namespace chordaffect
