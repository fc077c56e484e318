#include "biphoton/symmetry.hpp"

#include "biphoton/errors.hpp"

namespace biphoton {

std::string_view to_string(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::Symmetric:
      return "Symmetric";
    case SymmetryClass::Antisymmetric:
      return "Antisymmetric";
    default:
      return "Mixed";
  }
}

ExchangeParts exchange_decompose(const TwoPhotonState& state) {
  ExchangeParts parts{TwoPhotonState(state.grid_ptr()), TwoPhotonState(state.grid_ptr())};
  for (Channel c : kAllChannels) {
    const Eigen::MatrixXcd& direct = state.channel(c);
    const Eigen::MatrixXcd swapped = state.channel(exchanged_channel(c)).transpose();
    if (!state.has_channel(c) && !state.has_channel(exchanged_channel(c))) continue;
    parts.symmetric.set_channel(c, 0.5 * (direct + swapped));
    parts.antisymmetric.set_channel(c, 0.5 * (direct - swapped));
  }
  return parts;
}

SymmetryReport classify_symmetry(const TwoPhotonState& state, double tol) {
  const double n2 = state.squared_norm();
  if (!(n2 > 0.0)) throw DegenerateState("cannot classify a zero state");

  const ExchangeParts parts = exchange_decompose(state);
  SymmetryReport report;
  report.symmetric_fraction = parts.symmetric.squared_norm() / n2;
  report.antisymmetric_fraction = parts.antisymmetric.squared_norm() / n2;
  if (report.antisymmetric_fraction < tol) {
    report.cls = SymmetryClass::Symmetric;
  } else if (report.symmetric_fraction < tol) {
    report.cls = SymmetryClass::Antisymmetric;
  } else {
    report.cls = SymmetryClass::Mixed;
  }
  return report;
}

}  // namespace biphoton
