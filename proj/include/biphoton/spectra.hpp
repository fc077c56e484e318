#pragma once

#include <Eigen/Dense>

#include <limits>

#include "biphoton/grid.hpp"
#include "biphoton/state.hpp"

namespace biphoton {

// Narrowest pump bandwidth the quadrature grid resolves reliably; callers
// requesting the monochromatic-pump limit use this stand-in value.
inline constexpr double kBetaMin = 0.02;

// Sentinel for an infinitely broad pump: the pump envelope is identically 1
// and the joint spectrum factorizes into independent photons.
inline constexpr double kBetaInf = std::numeric_limits<double>::infinity();

// Gaussian spectral profile exp(-nu^2/2) sampled on the grid, scaled so that
// sum_i w_i |f_i|^2 == 1.
Eigen::VectorXcd gaussian_packet(const FrequencyGrid& grid);

// Down-converted photon-pair state: a single HH channel carrying
// C(nu1,nu2) ∝ exp[-(nu1+nu2)^2/(2 beta^2)] exp[-nu1^2/2] exp[-nu2^2/2],
// normalized to unit total norm. beta is the pump-to-photon bandwidth ratio;
// +inf selects the separable product exp[-nu1^2/2] exp[-nu2^2/2].
// Throws UnsupportedParameter for beta < kBetaMin (other than +inf) or NaN.
TwoPhotonState build_spdc_spectrum(GridPtr grid, double beta);

// Two-photon state from independent single-photon wavepackets in ports 1 and 2:
// C_pq(nu1,nu2) = C_1p(nu1) C_2q(nu2), normalized.
// Throws IncompatibleGrids when the wavepackets live on different grids.
TwoPhotonState product_state(const SinglePhotonWavepacket& wp1,
                             const SinglePhotonWavepacket& wp2);

// Multiply every channel by the propagation phase e^{i(nu1 z1 + nu2 z2)}
// (detunings in units of sigma, path lengths in units of c/sigma; the
// carrier-frequency global phase is dropped). Norm unchanged.
TwoPhotonState apply_path_phase(const TwoPhotonState& state, double z1, double z2);

// Unbalanced two-path section traversed by the port-1 photon before the
// splitter: each channel is multiplied by cos(nu1 * delta_l + alpha), where
// delta_l is half the arm-length difference (units c/sigma) and alpha the
// carrier phase across that difference, then the state is renormalized.
// Throws DegenerateState when the cosine annihilates the state
// (post/pre squared-norm ratio below 1e-12).
TwoPhotonState apply_interferometer(const TwoPhotonState& state, double delta_l, double alpha);

}  // namespace biphoton
