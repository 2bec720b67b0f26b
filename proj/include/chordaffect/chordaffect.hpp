/// @file
/// @brief Umbrella header.

#pragma once

#include "chordaffect/affect.hpp"
#include "chordaffect/analysis.hpp"
#include "chordaffect/appendix.hpp"
#include "chordaffect/audio.hpp"
#include "chordaffect/consonance.hpp"
#include "chordaffect/emotion.hpp"
#include "chordaffect/errors.hpp"
#include "chordaffect/format.hpp"
#include "chordaffect/proportion.hpp"
#include "chordaffect/proportion_text.hpp"
#include "chordaffect/rational.hpp"
#include "chordaffect/rationalize.hpp"
#include "chordaffect/triad_grid.hpp"
