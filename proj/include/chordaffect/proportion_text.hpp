/// @file
/// @brief Parsing proportion text such as "4:5:6" or "/6:/5:/4".
///
/// Terms are separated by ':'; a leading '/' marks a reciprocal, so "/6"
/// stands for 1/6. Direct and reciprocal terms may be mixed ("/4:/2:1").

#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "chordaffect/errors.hpp"
#include "chordaffect/proportion.hpp"
#include "chordaffect/rational.hpp"

namespace chordaffect {

inline std::vector<Rational> parse_proportion_terms(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  while (true) {
    skip_space();
    bool reciprocal = false;
    if (pos < text.size() && text[pos] == '/') {
      reciprocal = true;
      ++pos;
      skip_space();
    }
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError("proportion term too large", start);
      }
      value = value * 10 + digit;
      ++pos;
    }
    if (pos == start) throw ParseError("expected a positive integer", pos);
    if (value == 0) throw ParseError("proportion terms must be positive", start);
    out.push_back(reciprocal ? Rational(1, value) : Rational(value));
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ':') throw ParseError("expected ':'", pos);
    ++pos;
  }
  return out;
}

inline Proportion parse_proportion(std::string_view text) {
  return Proportion::normalize(parse_proportion_terms(text));
}

/// True when the text opens with a reciprocal term ("/6:/5:/4").
inline bool is_reciprocal_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  return first != std::string_view::npos && text[first] == '/';
}

}  // namespace chordaffect
