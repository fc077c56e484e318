#include "biphoton/state.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

// Scaling below this squared norm is numerically meaningless.
constexpr double kDegenerateNorm2 = 1e-280;

Eigen::Map<const Eigen::VectorXd> weight_vector(const FrequencyGrid& grid) {
  return {grid.weights.data(), static_cast<Eigen::Index>(grid.weights.size())};
}

const Eigen::MatrixXcd& zero_matrix(int n) {
  // Node-based map keeps the returned references stable across sizes.
  static thread_local std::map<int, Eigen::MatrixXcd> cache;
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) it->second = Eigen::MatrixXcd::Zero(n, n);
  return it->second;
}

}  // namespace

Pol channel_pol1(Channel c) {
  switch (c) {
    case Channel::HH:
    case Channel::HV:
      return Pol::H;
    default:
      return Pol::V;
  }
}

Pol channel_pol2(Channel c) {
  switch (c) {
    case Channel::HH:
    case Channel::VH:
      return Pol::H;
    default:
      return Pol::V;
  }
}

Channel make_channel(Pol p1, Pol p2) {
  if (p1 == Pol::H) return p2 == Pol::H ? Channel::HH : Channel::HV;
  return p2 == Pol::H ? Channel::VH : Channel::VV;
}

Channel exchanged_channel(Channel c) {
  switch (c) {
    case Channel::HV:
      return Channel::VH;
    case Channel::VH:
      return Channel::HV;
    default:
      return c;
  }
}

std::string_view to_string(Channel c) {
  switch (c) {
    case Channel::HH:
      return "HH";
    case Channel::VV:
      return "VV";
    case Channel::HV:
      return "HV";
    default:
      return "VH";
  }
}

std::optional<Channel> channel_from_string(std::string_view s) {
  if (s == "HH") return Channel::HH;
  if (s == "VV") return Channel::VV;
  if (s == "HV") return Channel::HV;
  if (s == "VH") return Channel::VH;
  return std::nullopt;
}

double weighted_squared_norm(const FrequencyGrid& grid, const Eigen::MatrixXcd& values) {
  const auto w = weight_vector(grid);
  return w.dot(values.cwiseAbs2() * w);
}

double JointAmplitude::squared_norm() const { return weighted_squared_norm(*grid, values); }

TwoPhotonState::TwoPhotonState(GridPtr grid) : grid_(std::move(grid)) {
  if (!grid_) throw std::invalid_argument("two-photon state needs a grid");
}

bool TwoPhotonState::has_channel(Channel c) const { return channels_.count(c) > 0; }

const Eigen::MatrixXcd& TwoPhotonState::channel(Channel c) const {
  auto it = channels_.find(c);
  return it != channels_.end() ? it->second : zero_matrix(grid_->n());
}

void TwoPhotonState::set_channel(Channel c, Eigen::MatrixXcd values) {
  const int n = grid_->n();
  if (values.rows() != n || values.cols() != n) {
    throw std::invalid_argument("channel matrix does not match the grid size");
  }
  if (!values.allFinite()) {
    throw std::invalid_argument("channel matrix has non-finite entries");
  }
  if (values.isZero(0.0)) {
    channels_.erase(c);
  } else {
    channels_[c] = std::move(values);
  }
}

double TwoPhotonState::squared_norm() const {
  double total = 0.0;
  for (const auto& [c, m] : channels_) total += weighted_squared_norm(*grid_, m);
  return total;
}

TwoPhotonState TwoPhotonState::normalized() const {
  const double n2 = squared_norm();
  if (!std::isfinite(n2) || n2 < kDegenerateNorm2) {
    throw DegenerateState("cannot normalize a (near-)zero two-photon state");
  }
  TwoPhotonState out(grid_);
  const double scale = 1.0 / std::sqrt(n2);
  for (const auto& [c, m] : channels_) out.set_channel(c, scale * m);
  return out;
}

double SinglePhotonWavepacket::squared_norm() const {
  const auto w = weight_vector(*grid);
  double total = 0.0;
  for (const auto& a : amps) {
    if (a.size() > 0) total += w.dot(a.cwiseAbs2());
  }
  return total;
}

SinglePhotonWavepacket SinglePhotonWavepacket::normalized() const {
  const double n2 = squared_norm();
  if (!std::isfinite(n2) || n2 < kDegenerateNorm2) {
    throw DegenerateState("cannot normalize a (near-)zero wavepacket");
  }
  SinglePhotonWavepacket out{grid, {}};
  const double scale = 1.0 / std::sqrt(n2);
  for (int p = 0; p < 2; ++p) {
    if (amps[p].size() > 0) out.amps[p] = scale * amps[p];
  }
  return out;
}

}  // namespace biphoton
