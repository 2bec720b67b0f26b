/// @file
/// @brief Exception types shared by the chordaffect headers.

#pragma once

#include <stdexcept>
#include <string>

namespace chordaffect {

/// Malformed or out-of-domain input (bad proportion text, zero term, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer arithmetic would leave its supported range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// No small-integer proportion fits the input within the tolerance.
class NoProportionFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that failed to parse; `position` is the 0-based offending offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace chordaffect
