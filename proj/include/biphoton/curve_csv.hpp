#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biphoton/scenarios.hpp"

namespace biphoton {

// Shortest decimal representation of x that round-trips 9 significant digits;
// locale-independent, '.' separator ("0.5", "1", "0.432332358").
std::string format_number9(double x);

// CSV with header `dz,pc_numeric,pc_analytic`, one row per point in input
// order, absent values as empty fields, numbers via format_number9.
// Byte-identical output for identical input.
void emit_curve_csv(const std::vector<CurvePoint>& points, std::ostream& out);

}  // namespace biphoton
