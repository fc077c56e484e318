#pragma once

#include <string_view>

#include "biphoton/state.hpp"

namespace biphoton {

enum class SymmetryClass { Symmetric, Antisymmetric, Mixed };

std::string_view to_string(SymmetryClass s);

// Split under simultaneous exchange of the two photons' frequencies and
// polarizations: (XC)_pq(nu1,nu2) = C_qp(nu2,nu1);
// symmetric = (C + XC)/2, antisymmetric = (C - XC)/2.
// The parts reconstruct the input exactly and are norm-orthogonal.
struct ExchangeParts {
  TwoPhotonState symmetric;
  TwoPhotonState antisymmetric;
};

ExchangeParts exchange_decompose(const TwoPhotonState& state);

struct SymmetryReport {
  SymmetryClass cls = SymmetryClass::Mixed;
  double symmetric_fraction = 0.0;      // |sym|^2 / |C|^2
  double antisymmetric_fraction = 0.0;  // |anti|^2 / |C|^2
};

// Symmetric when the antisymmetric fraction is below tol, antisymmetric when
// the symmetric fraction is, Mixed otherwise. Throws DegenerateState on a
// zero state.
SymmetryReport classify_symmetry(const TwoPhotonState& state, double tol = 1e-6);

}  // namespace biphoton
