#include "biphoton/curve_csv.hpp"

#include <charconv>
#include <ostream>

namespace biphoton {

std::string format_number9(double x) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 9);
  return std::string(buf, ptr);
}

void emit_curve_csv(const std::vector<CurvePoint>& points, std::ostream& out) {
  out << "dz,pc_numeric,pc_analytic\n";
  for (const CurvePoint& p : points) {
    out << format_number9(p.dz) << ',';
    if (p.pc_numeric) out << format_number9(*p.pc_numeric);
    out << ',';
    if (p.pc_analytic) out << format_number9(*p.pc_analytic);
    out << '\n';
  }
}

}  // namespace biphoton
