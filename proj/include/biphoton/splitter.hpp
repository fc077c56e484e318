#pragma once

#include <Eigen/Dense>

#include <compare>
#include <map>
#include <numbers>
#include <string_view>

#include "biphoton/state.hpp"

namespace biphoton {

// Lossless two-port splitter: mixing angle theta (theta = pi/4 is 50/50) and
// the free transmission/reflection phases.
struct BeamSplitterParams {
  double theta = std::numbers::pi / 4;
  double phi_tau = 0.0;
  double phi_rho = 0.0;
};

inline BeamSplitterParams fifty_fifty() { return BeamSplitterParams{}; }

// Exit-port assignment of (row-index photon, column-index photon).
// Canonical outputs use Both1, Both2, and Coinc12 only: coincidence
// contributions arriving with the row photon in port 2 are folded into
// Coinc12 by transposing the amplitude, and Both-sector contributions with
// polarization VH are folded into HV the same way.
enum class PortPair : int { Both1 = 0, Both2 = 1, Coinc12 = 2, Coinc21 = 3 };

std::string_view to_string(PortPair p);

struct SectorKey {
  Channel channel;
  PortPair ports;
  friend auto operator<=>(const SectorKey&, const SectorKey&) = default;
};

// Splitter output: amplitudes per (polarization channel, exit-port pair).
// For coincidence sectors the row index is the port-1 photon's frequency and
// the channel is (port-1 polarization, port-2 polarization). Same-polarization
// Both sectors are stored symmetrized, the canonical representative for two
// identical bosons in one port.
class OutputState {
 public:
  OutputState(GridPtr grid, double input_norm);

  const GridPtr& grid_ptr() const { return grid_; }
  const FrequencyGrid& grid() const { return *grid_; }
  double input_norm() const { return input_norm_; }

  bool has_sector(const SectorKey& key) const;
  // Zero matrix for absent sectors.
  const Eigen::MatrixXcd& sector(const SectorKey& key) const;
  const std::map<SectorKey, Eigen::MatrixXcd>& sectors() const { return sectors_; }

  void add_sector(const SectorKey& key, const Eigen::MatrixXcd& values);

 private:
  GridPtr grid_;
  double input_norm_ = 0.0;
  std::map<SectorKey, Eigen::MatrixXcd> sectors_;
};

// Mode-operator matrix S with S(theta,phi_tau,phi_rho) =
//   [  e^{i phi_tau} cos(theta)   e^{i phi_rho} sin(theta) ]
//   [ -e^{-i phi_rho} sin(theta)  e^{-i phi_tau} cos(theta) ]
// Unitary for all parameters. Throws UnsupportedParameter when theta is
// outside [0, pi/2] or any parameter is non-finite; phases are wrapped
// into (-pi, pi].
Eigen::Matrix2cd bs_matrix(const BeamSplitterParams& params);

// Coefficients u with row k giving the expansion of the substituted creation
// operator for input port k over output-port creation operators:
// b1 = u(0,0) a1 + u(0,1) a2, b2 = u(1,0) a1 + u(1,1) a2. Equals bs_matrix
// transposed; unitary.
Eigen::Matrix2cd creation_substitution(const BeamSplitterParams& params);

// Push a two-photon state through the splitter: substitute both creation
// operators, expand the four port products per channel, and accumulate into
// canonically keyed sectors (see PortPair). Works for unnormalized states;
// the input norm is recorded on the output.
// Throws UnsupportedParameter for invalid params.
OutputState transform(const TwoPhotonState& state, const BeamSplitterParams& params);

namespace detail {
// transform with an explicit substitution-coefficient matrix; rows need not
// come from a BeamSplitterParams (used to test composition of two splitters).
OutputState transform_with(const TwoPhotonState& state, const Eigen::Matrix2cd& u);
}  // namespace detail

// Bosonic squared norm of one sector, 0 for absent ones. Plain quadrature
// norm sum w_i w_j |A_ij|^2 for coincidence sectors and for Both sectors with
// distinct polarizations; symmetrized norm sum w_i w_j [|A_ij|^2 +
// A_ij conj(A_ji)] when two same-polarization photons share a port.
double sector_norm(const OutputState& output, const SectorKey& key);

// Sum of sector_norm over all sectors; equals input_norm for a lossless
// splitter (unitarity).
double total_norm(const OutputState& output);

// Fraction of the output in coincidence sectors (one photon per exit port):
// sum of coincidence sector norms / input_norm, in [0, 1].
double coincidence_probability(const OutputState& output);

// The coincidence part of the output reassembled as a two-photon state over
// the exit ports (row = port-1 photon). Channels with zero amplitude are
// absent.
TwoPhotonState coincidence_state(const OutputState& output);

// Coincidence probability of the 50/50 splitter evaluated directly from the
// input amplitudes:
//   P_c = 1/2 - Re(T) / (2 |C|^2),
//   T = sum w_i w_j [ 2 C_HV(i,j) conj(C_VH(j,i)) + sum_p C_pp(i,j) conj(C_pp(j,i)) ].
// Valid only for the 50/50 splitter. Throws DegenerateNormalization on a
// zero state.
double coincidence_probability_formula(const TwoPhotonState& state);

// Coincidence probability for two independent single-photon wavepackets at a
// 50/50 splitter, from the overlap closed form
//   P_c = 1/2 [1 - |sum_i w_i (C_1H conj(C_2H) + C_1V conj(C_2V))|^2]
// (wavepackets are normalized internally). Always <= 1/2.
// Throws IncompatibleGrids on mismatched grids, DegenerateState on zero input.
double product_state_cp(const SinglePhotonWavepacket& wp1, const SinglePhotonWavepacket& wp2);

}  // namespace biphoton
