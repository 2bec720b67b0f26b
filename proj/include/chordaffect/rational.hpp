/// @file
/// @brief Exact positive fractions and checked gcd/lcm helpers.

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "chordaffect/errors.hpp"

namespace chordaffect {

/// a * b, throwing OverflowError instead of wrapping.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer product exceeds 64 bits");
  }
  return out;
}

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

/// Positive fraction num/den, always stored reduced.
class Rational {
 public:
  Rational() = default;

  Rational(std::uint64_t num, std::uint64_t den = 1) : num_(num), den_(den) {  // NOLINT
    if (num == 0 || den == 0) {
      throw InputError("rational terms must be positive");
    }
    const std::uint64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational reciprocal() const { return Rational(den_, num_); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first so intermediate products stay small.
    const std::uint64_t g1 = std::gcd(a.num_, b.den_);
    const std::uint64_t g2 = std::gcd(b.num_, a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    return a * b.reciprocal();
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  std::uint64_t num_ = 1;
  std::uint64_t den_ = 1;
};

}  // namespace chordaffect
