#pragma once

#include <vector>

#include "biphoton/state.hpp"

namespace biphoton {

// Entanglement structure of a two-photon amplitude between the port-1 and
// port-2 photon subsystems, each spanning polarization x frequency.
struct SchmidtReport {
  std::vector<double> singular_values;  // non-increasing; squares sum to 1
  double schmidt_number = 1.0;          // K = 1 / sum_i p_i^2, p_i = s_i^2 / sum_j s_j^2
  bool entangled = false;               // K > 1 + tol
};

// Singular values of the quadrature-weighted amplitude matrix
// M[(p,i),(q,j)] = sqrt(w_i w_j) C_pq(nu_i,nu_j), after scaling the state to
// unit norm. tol is the entanglement threshold on K - 1. Throws
// DegenerateState on a zero state.
//
// States populating only the same-polarization channels (HH, VV) or only the
// cross ones (HV, VH) have a block-structured M; the decomposition then
// reduces exactly to per-block SVDs and that shortcut is taken automatically.
SchmidtReport schmidt_analysis(const TwoPhotonState& state, double tol = 1e-6);

// K for the untruncated down-conversion spectrum, from the closed form
// K = (s + 1/s)/2 with s = beta / sqrt(2 + beta^2). Requires beta > 0;
// +inf gives exactly 1.
double spdc_schmidt_number(double beta);

}  // namespace biphoton
