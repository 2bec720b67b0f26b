/// @file
/// @brief Command-line front end: analyze | grid | wav | table.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordaffect::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNoProportion = 3;

/// Runs one command; `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordaffect::cli
