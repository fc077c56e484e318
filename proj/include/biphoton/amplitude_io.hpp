#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "biphoton/state.hpp"

namespace biphoton {

// Text format for two-photon amplitudes:
//   grid: <half_width> <n_points>
//   <channel> <i> <j> <re> <im>
// with channel in {HH, VV, HV, VH} and 0-based grid indices. Blank lines and
// lines starting with '#' are ignored. Each (channel, i, j) may appear once.
//
// parse returns the normalized state; ParseError (with the 1-based line
// number) reports malformed headers or rows, duplicates, and out-of-range
// indices or values.
TwoPhotonState parse_amplitude_file(std::string_view text);

// Inverse of parse (up to normalization): writes the header and one row per
// stored entry in deterministic channel/index order, full round-trip
// precision.
void emit_amplitude_file(const TwoPhotonState& state, std::ostream& out);

std::string amplitude_file_string(const TwoPhotonState& state);

}  // namespace biphoton
