/// @file
/// @brief Canonical chord proportions a1:...:aM and their inverse writing.
///
/// A proportion lists the relative pitches of a chord lowest voice first as
/// coprime positive integers. The same chord can be written inversely as
/// (1/d1):...:(1/dM) with di = lcm(a)/ai; comparing the term products of the
/// two writings is what separates major from minor.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chordaffect/errors.hpp"
#include "chordaffect/rational.hpp"

namespace chordaffect {

using BigInt = boost::multiprecision::cpp_int;

/// Ascending, globally coprime tuple of positive integers.
class Proportion {
 public:
  /// Unison of one voice.
  Proportion() : terms_{1} {}

  /// Normalizes any positive integers (order and common factors irrelevant).
  static Proportion from_terms(std::span<const std::uint64_t> raw) {
    if (raw.empty()) throw InputError("proportion needs at least one term");
    std::vector<std::uint64_t> terms(raw.begin(), raw.end());
    std::uint64_t g = 0;
    for (auto t : terms) {
      if (t == 0) throw InputError("proportion terms must be positive");
      g = std::gcd(g, t);
    }
    for (auto& t : terms) t /= g;
    std::sort(terms.begin(), terms.end());
    return Proportion(std::move(terms));
  }

  static Proportion from_terms(std::initializer_list<std::uint64_t> raw) {
    return from_terms(std::span<const std::uint64_t>(raw.begin(), raw.size()));
  }

  /// Unique ascending coprime integer tuple proportional to `raw`.
  static Proportion normalize(std::span<const Rational> raw) {
    if (raw.empty()) throw InputError("proportion needs at least one term");
    std::uint64_t common_den = 1;
    for (const auto& r : raw) common_den = checked_lcm(common_den, r.den());
    std::vector<std::uint64_t> terms;
    terms.reserve(raw.size());
    for (const auto& r : raw) {
      terms.push_back(checked_mul(r.num(), common_den / r.den()));
    }
    return from_terms(terms);
  }

  static Proportion normalize(std::initializer_list<Rational> raw) {
    return normalize(std::span<const Rational>(raw.begin(), raw.size()));
  }

  std::span<const std::uint64_t> terms() const noexcept { return terms_; }
  std::size_t voices() const noexcept { return terms_.size(); }
  std::uint64_t operator[](std::size_t i) const { return terms_.at(i); }
  std::uint64_t max_term() const noexcept { return terms_.back(); }

  std::uint64_t lcm() const {
    std::uint64_t l = 1;
    for (auto t : terms_) l = checked_lcm(l, t);
    return l;
  }

  /// "4:5:6"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += ':';
      out += std::to_string(terms_[i]);
    }
    return out;
  }

  friend bool operator==(const Proportion&, const Proportion&) = default;
  friend auto operator<=>(const Proportion&, const Proportion&) = default;

 private:
  explicit Proportion(std::vector<std::uint64_t> terms) : terms_(std::move(terms)) {}

  std::vector<std::uint64_t> terms_;
};

/// Term products of the direct and inverse writings.
struct ProportionProducts {
  BigInt direct;   ///< prod(ai)
  BigInt inverse;  ///< prod(lcm(a)/ai)

  friend bool operator==(const ProportionProducts&, const ProportionProducts&) = default;
};

/// di = lcm(a)/ai in voice order, so the list is non-increasing.
inline std::vector<std::uint64_t> inverse_numbers(const Proportion& p) {
  const std::uint64_t l = p.lcm();
  std::vector<std::uint64_t> out;
  out.reserve(p.voices());
  for (auto t : p.terms()) out.push_back(l / t);
  return out;
}

/// The chord with every pitch ratio reciprocated; an involution.
inline Proportion mirror(const Proportion& p) {
  return Proportion::from_terms(inverse_numbers(p));
}

inline ProportionProducts products(const Proportion& p) {
  ProportionProducts out{1, 1};
  for (auto t : p.terms()) out.direct *= t;
  for (auto d : inverse_numbers(p)) out.inverse *= d;
  return out;
}

/// Inverse writing in the "/15:/12:/10" shorthand; a term of 1 is written
/// bare, as in "/4:/2:1".
inline std::string inverse_text(const Proportion& p) {
  std::string out;
  const auto d = inverse_numbers(p);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ':';
    if (d[i] != 1) out += '/';
    out += std::to_string(d[i]);
  }
  return out;
}

}  // namespace chordaffect
