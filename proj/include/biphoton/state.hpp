#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string_view>

#include "biphoton/grid.hpp"

namespace biphoton {

enum class Pol : int { H = 0, V = 1 };

// Polarization channel of a two-photon amplitude: (port-1 photon, port-2 photon).
// HV and VH are distinct channels.
enum class Channel : int { HH = 0, VV = 1, HV = 2, VH = 3 };

inline constexpr std::array<Channel, 4> kAllChannels{Channel::HH, Channel::VV, Channel::HV,
                                                     Channel::VH};

Pol channel_pol1(Channel c);
Pol channel_pol2(Channel c);
Channel make_channel(Pol p1, Pol p2);

// HV <-> VH; HH and VV map to themselves.
Channel exchanged_channel(Channel c);

std::string_view to_string(Channel c);
std::optional<Channel> channel_from_string(std::string_view s);

// Discretized complex amplitude C(nu_i, nu_j) for one polarization channel.
// Row index = detuning of the photon in the first slot, column index = second slot.
struct JointAmplitude {
  GridPtr grid;
  Eigen::MatrixXcd values;

  // sum_ij w_i w_j |C_ij|^2
  double squared_norm() const;
};

double weighted_squared_norm(const FrequencyGrid& grid, const Eigen::MatrixXcd& values);

// Two-photon wavepacket entering the splitter: one photon per input port,
// decomposed over the four polarization channels. Absent channels are
// exactly-zero amplitudes, never errors.
class TwoPhotonState {
 public:
  explicit TwoPhotonState(GridPtr grid);

  const GridPtr& grid_ptr() const { return grid_; }
  const FrequencyGrid& grid() const { return *grid_; }

  bool has_channel(Channel c) const;
  // Zero matrix for absent channels.
  const Eigen::MatrixXcd& channel(Channel c) const;
  // Throws std::invalid_argument on dimension mismatch or non-finite entries;
  // a zero matrix erases the channel.
  void set_channel(Channel c, Eigen::MatrixXcd values);

  const std::map<Channel, Eigen::MatrixXcd>& channels() const { return channels_; }

  double squared_norm() const;

  // Scales so that squared_norm() == 1. Throws DegenerateState on a zero state.
  TwoPhotonState normalized() const;

 private:
  GridPtr grid_;
  std::map<Channel, Eigen::MatrixXcd> channels_;
};

// Single-photon wavepacket in port j: complex spectral amplitude per polarization.
struct SinglePhotonWavepacket {
  GridPtr grid;
  std::array<Eigen::VectorXcd, 2> amps;  // indexed by Pol; zero-size = zero component

  const Eigen::VectorXcd& amp(Pol p) const { return amps[static_cast<int>(p)]; }

  double squared_norm() const;
  // Throws DegenerateState on a zero wavepacket.
  SinglePhotonWavepacket normalized() const;
};

}  // namespace biphoton
