/// @file
/// @brief The 12-TET triad plane: every (i, j) pair of upper-voice offsets.
///
/// Cell (i, j) is the triad {0, i, j} semitones above the root, 1 <= i < j.
/// Cells (i, j) and (j - i, j) hold mirrored chords, so a consistent
/// analysis shows them with opposite classifications.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordaffect/affect.hpp"
#include "chordaffect/consonance.hpp"
#include "chordaffect/errors.hpp"
#include "chordaffect/format.hpp"
#include "chordaffect/rationalize.hpp"

namespace chordaffect {

struct GridConfig {
  int j_max = 12;
  double root = 261.63;
  /// 2% rather than the usual 1%: equal-tempered stacked thirds miss
  /// 16:20:25 by up to ~1.6%.
  RationalizeConfig rationalize{0.02, 64, 8};
  PowerOptions power{};
};

enum class CellClass { Major, Minor, Symmetric, Ambiguous, Unclassified };

inline std::string_view to_string(CellClass c) {
  switch (c) {
    case CellClass::Major: return "major";
    case CellClass::Minor: return "minor";
    case CellClass::Symmetric: return "symmetric";
    case CellClass::Ambiguous: return "ambiguous";
    case CellClass::Unclassified: return "unclassified";
  }
  return "?";
}

struct GridCell {
  int lower = 0;  ///< i
  int upper = 0;  ///< j
  std::optional<Proportion> proportion;
  std::optional<PowerReport> analysis;
  std::optional<bool> consonant;
  double max_error = 0.0;
  /// The proportion and its mirror fit equally well (self-mirror cells).
  bool mirror_tie = false;

  CellClass cell_class() const {
    if (!analysis) return CellClass::Unclassified;
    if (mirror_tie) return CellClass::Ambiguous;
    switch (analysis->classification) {
      case Classification::Major: return CellClass::Major;
      case Classification::Minor: return CellClass::Minor;
      case Classification::Symmetric: return CellClass::Symmetric;
    }
    return CellClass::Unclassified;
  }
};

class TriadGrid {
 public:
  TriadGrid(int j_max, std::vector<GridCell> cells) : j_max_(j_max), cells_(std::move(cells)) {}

  int j_max() const noexcept { return j_max_; }
  /// Ordered by i, then j.
  const std::vector<GridCell>& cells() const noexcept { return cells_; }

  const GridCell& at(int i, int j) const {
    for (const auto& c : cells_) {
      if (c.lower == i && c.upper == j) return c;
    }
    throw InputError("no grid cell (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }

 private:
  int j_max_;
  std::vector<GridCell> cells_;
};

inline GridCell analyze_cell(int i, int j, const GridConfig& cfg) {
  GridCell cell;
  cell.lower = i;
  cell.upper = j;
  const std::array<double, 3> offsets{0.0, static_cast<double>(i), static_cast<double>(j)};
  const auto freqs = semitones_to_freqs(offsets, cfg.root);
  try {
    const auto r = rationalize_detailed(freqs, cfg.rationalize);
    cell.proportion = r.proportion;
    cell.max_error = r.max_error;
    cell.mirror_tie = r.mirror_tie;
    cell.analysis = emotional_power(r.proportion, cfg.power);
    cell.consonant = chord_consonant(r.proportion);
  } catch (const NoProportionFound&) {
  }
  return cell;
}

inline TriadGrid generate_grid(const GridConfig& cfg = {}) {
  if (cfg.j_max < 2 || cfg.j_max > 24) throw InputError("j_max must lie in 2..24");
  cfg.rationalize.validate();
  std::vector<GridCell> cells;
  cells.reserve(static_cast<std::size_t>(cfg.j_max * (cfg.j_max - 1) / 2));
  for (int i = 1; i < cfg.j_max; ++i) {
    for (int j = i + 1; j <= cfg.j_max; ++j) cells.push_back(analyze_cell(i, j, cfg));
  }
  return TriadGrid(cfg.j_max, std::move(cells));
}

enum class GridFormat { Csv, Image };

inline GridFormat parse_grid_format(std::string_view name) {
  if (name == "csv") return GridFormat::Csv;
  if (name == "image" || name == "ppm") return GridFormat::Image;
  throw InputError("unsupported grid format '" + std::string(name) + "' (csv, image)");
}

inline std::string grid_csv(const TriadGrid& grid) {
  std::string out =
      "i,j,proportion,class,pwe_main,pwe_side,pwe_adjusted,near_symmetric,consonant\n";
  for (const auto& c : grid.cells()) {
    out += std::to_string(c.lower) + ',' + std::to_string(c.upper) + ',';
    if (c.analysis) {
      const auto& a = *c.analysis;
      out += c.proportion->to_string() + ',' + std::string(to_string(c.cell_class())) + ',' +
             format_fixed(a.pwe_main, 6) + ',' + format_fixed(a.pwe_side, 6) + ',' +
             format_fixed(a.pwe_adjusted, 6) + ',' + (a.near_symmetric ? "true" : "false") +
             ',' + (*c.consonant ? "true" : "false");
    } else {
      out += "," + std::string(to_string(CellClass::Unclassified)) + ",,,,,";
    }
    out += '\n';
  }
  return out;
}

struct Rgb {
  int r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Red for major, blue for minor, scaled by |pwe_adjusted| up to 3.0; gray
/// for symmetric, near-symmetric and ambiguous cells; white if unresolved.
inline Rgb cell_color(const GridCell& c) {
  const auto cls = c.cell_class();
  if (cls == CellClass::Unclassified) return {255, 255, 255};
  if (cls == CellClass::Symmetric || cls == CellClass::Ambiguous || c.analysis->near_symmetric) {
    return {128, 128, 128};
  }
  const double s = std::min(std::abs(c.analysis->pwe_adjusted), 3.0) / 3.0;
  const int v = static_cast<int>(std::lround(255.0 * s));
  return cls == CellClass::Major ? Rgb{v, 0, 0} : Rgb{0, 0, v};
}

/// Plain PPM (P3), j_max x j_max; column j-1, bottom row i = 1. Pixels
/// outside the triangle are black.
inline std::string grid_ppm(const TriadGrid& grid) {
  const int n = grid.j_max();
  std::vector<Rgb> pixels(static_cast<std::size_t>(n * n));
  for (const auto& c : grid.cells()) {
    const int row = n - c.lower;
    const int col = c.upper - 1;
    pixels[static_cast<std::size_t>(row * n + col)] = cell_color(c);
  }
  std::string out = "P3\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const auto& p = pixels[static_cast<std::size_t>(row * n + col)];
      if (col) out += ' ';
      out += std::to_string(p.r) + ' ' + std::to_string(p.g) + ' ' + std::to_string(p.b);
    }
    out += '\n';
  }
  return out;
}

inline std::string emit_grid(const TriadGrid& grid, GridFormat format) {
  return format == GridFormat::Csv ? grid_csv(grid) : grid_ppm(grid);
}

}  // namespace chordaffect
