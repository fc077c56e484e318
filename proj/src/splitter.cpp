#include "biphoton/splitter.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

using std::complex;

constexpr double kPi = std::numbers::pi;

double wrap_phase(double phi) {
  const double r = std::remainder(phi, 2.0 * kPi);
  return r == -kPi ? kPi : r;
}

BeamSplitterParams canonical(const BeamSplitterParams& params) {
  if (!std::isfinite(params.theta) || !std::isfinite(params.phi_tau) ||
      !std::isfinite(params.phi_rho)) {
    throw UnsupportedParameter("splitter parameters must be finite");
  }
  if (params.theta < 0.0 || params.theta > kPi / 2.0) {
    throw UnsupportedParameter("splitter mixing angle must lie in [0, pi/2]");
  }
  return {params.theta, wrap_phase(params.phi_tau), wrap_phase(params.phi_rho)};
}

Eigen::Map<const Eigen::VectorXd> weight_vector(const FrequencyGrid& grid) {
  return {grid.weights.data(), static_cast<Eigen::Index>(grid.weights.size())};
}

double plain_norm(const FrequencyGrid& grid, const Eigen::MatrixXcd& a) {
  const auto w = weight_vector(grid);
  return w.dot(a.cwiseAbs2() * w);
}

// sum_ij w_i w_j x_ij conj(y_ji)
complex<double> swap_overlap(const FrequencyGrid& grid, const Eigen::MatrixXcd& x,
                             const Eigen::MatrixXcd& y) {
  const auto w = weight_vector(grid);
  const Eigen::MatrixXcd prod = x.cwiseProduct(y.adjoint());
  return w.cast<complex<double>>().dot(prod * w.cast<complex<double>>());
}

bool same_polarization(Channel c) { return c == Channel::HH || c == Channel::VV; }

}  // namespace

std::string_view to_string(PortPair p) {
  switch (p) {
    case PortPair::Both1:
      return "Both1";
    case PortPair::Both2:
      return "Both2";
    case PortPair::Coinc12:
      return "Coinc12";
    default:
      return "Coinc21";
  }
}

OutputState::OutputState(GridPtr grid, double input_norm)
    : grid_(std::move(grid)), input_norm_(input_norm) {
  if (!grid_) throw std::invalid_argument("output state needs a grid");
}

bool OutputState::has_sector(const SectorKey& key) const { return sectors_.count(key) > 0; }

const Eigen::MatrixXcd& OutputState::sector(const SectorKey& key) const {
  static thread_local std::map<int, Eigen::MatrixXcd> zero_cache;
  auto it = sectors_.find(key);
  if (it != sectors_.end()) return it->second;
  auto [zit, inserted] = zero_cache.try_emplace(grid_->n());
  if (inserted) zit->second = Eigen::MatrixXcd::Zero(grid_->n(), grid_->n());
  return zit->second;
}

void OutputState::add_sector(const SectorKey& key, const Eigen::MatrixXcd& values) {
  if (values.rows() != grid_->n() || values.cols() != grid_->n()) {
    throw std::invalid_argument("sector matrix does not match the grid size");
  }
  auto [it, inserted] = sectors_.try_emplace(key, values);
  if (!inserted) it->second += values;
  if (it->second.isZero(0.0)) sectors_.erase(it);
}

Eigen::Matrix2cd bs_matrix(const BeamSplitterParams& params) {
  const BeamSplitterParams p = canonical(params);
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  const complex<double> et = std::polar(1.0, p.phi_tau);
  const complex<double> er = std::polar(1.0, p.phi_rho);
  Eigen::Matrix2cd s;
  s << et * ct, er * st, -std::conj(er) * st, std::conj(et) * ct;
  return s;
}

Eigen::Matrix2cd creation_substitution(const BeamSplitterParams& params) {
  return bs_matrix(params).transpose();
}

namespace detail {

OutputState transform_with(const TwoPhotonState& state, const Eigen::Matrix2cd& u) {
  OutputState out(state.grid_ptr(), state.squared_norm());

  std::map<SectorKey, Eigen::MatrixXcd> raw;
  const auto accumulate = [&raw](Channel ch, PortPair pp, Eigen::MatrixXcd m) {
    auto [it, inserted] = raw.try_emplace(SectorKey{ch, pp}, std::move(m));
    if (!inserted) it->second += m;
  };

  // Each input channel C_pq rides on creation operators for (port-1 photon
  // with row frequency, pol p) x (port-2 photon with column frequency, pol q).
  // Substituting both operators and expanding gives four exit-port products.
  for (const auto& [c, amp] : state.channels()) {
    const Pol p = channel_pol1(c);
    const Pol q = channel_pol2(c);
    accumulate(c, PortPair::Both1, (u(0, 0) * u(1, 0)) * amp);
    accumulate(c, PortPair::Both2, (u(0, 1) * u(1, 1)) * amp);
    accumulate(c, PortPair::Coinc12, (u(0, 0) * u(1, 1)) * amp);
    // Row photon lands in port 2: reorder the operators, which swaps the
    // frequency roles and the polarization tags, and keeps Coinc12 canonical.
    accumulate(make_channel(q, p), PortPair::Coinc12, (u(0, 1) * u(1, 0)) * amp.transpose());
  }

  for (auto& [key, m] : raw) {
    if (key.ports == PortPair::Both1 || key.ports == PortPair::Both2) {
      if (same_polarization(key.channel)) {
        // Two identical bosons in one port: only the exchange-symmetric part
        // of the amplitude is physical; store that representative.
        out.add_sector(key, 0.5 * (m + m.transpose()).eval());
      } else if (key.channel == Channel::VH) {
        // Reorder the two distinguishable same-port photons to the HV tag.
        out.add_sector(SectorKey{Channel::HV, key.ports}, m.transpose());
      } else {
        out.add_sector(key, m);
      }
    } else {
      out.add_sector(key, m);
    }
  }
  return out;
}

}  // namespace detail

OutputState transform(const TwoPhotonState& state, const BeamSplitterParams& params) {
  return detail::transform_with(state, creation_substitution(params));
}

double sector_norm(const OutputState& output, const SectorKey& key) {
  if (!output.has_sector(key)) return 0.0;
  const Eigen::MatrixXcd& a = output.sector(key);
  double norm = plain_norm(output.grid(), a);
  const bool both_port = key.ports == PortPair::Both1 || key.ports == PortPair::Both2;
  if (both_port && same_polarization(key.channel)) {
    norm += swap_overlap(output.grid(), a, a).real();
  }
  return norm;
}

double total_norm(const OutputState& output) {
  double total = 0.0;
  for (const auto& [key, m] : output.sectors()) total += sector_norm(output, key);
  return total;
}

double coincidence_probability(const OutputState& output) {
  if (!(output.input_norm() > 0.0)) {
    throw DegenerateNormalization("coincidence probability of a zero input");
  }
  double coinc = 0.0;
  for (const auto& [key, m] : output.sectors()) {
    if (key.ports == PortPair::Coinc12 || key.ports == PortPair::Coinc21) {
      coinc += sector_norm(output, key);
    }
  }
  return coinc / output.input_norm();
}

TwoPhotonState coincidence_state(const OutputState& output) {
  std::map<Channel, Eigen::MatrixXcd> channels;
  const auto accumulate = [&channels](Channel c, Eigen::MatrixXcd m) {
    auto [it, inserted] = channels.try_emplace(c, std::move(m));
    if (!inserted) it->second += m;
  };
  for (const auto& [key, m] : output.sectors()) {
    if (key.ports == PortPair::Coinc12) {
      accumulate(key.channel, m);
    } else if (key.ports == PortPair::Coinc21) {
      const Channel flipped =
          make_channel(channel_pol2(key.channel), channel_pol1(key.channel));
      accumulate(flipped, m.transpose());
    }
  }
  TwoPhotonState state(output.grid_ptr());
  for (auto& [c, m] : channels) state.set_channel(c, std::move(m));
  return state;
}

double coincidence_probability_formula(const TwoPhotonState& state) {
  const double n2 = state.squared_norm();
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw DegenerateNormalization("coincidence probability of a zero state");
  }
  const FrequencyGrid& grid = state.grid();
  complex<double> t = 0.0;
  if (state.has_channel(Channel::HV) && state.has_channel(Channel::VH)) {
    t += 2.0 * swap_overlap(grid, state.channel(Channel::HV), state.channel(Channel::VH));
  }
  for (Channel c : {Channel::HH, Channel::VV}) {
    if (state.has_channel(c)) t += swap_overlap(grid, state.channel(c), state.channel(c));
  }
  return 0.5 - 0.5 * t.real() / n2;
}

double product_state_cp(const SinglePhotonWavepacket& wp1, const SinglePhotonWavepacket& wp2) {
  if (!wp1.grid || !wp2.grid || !same_grid(*wp1.grid, *wp2.grid)) {
    throw IncompatibleGrids("product_state_cp needs wavepackets on one grid");
  }
  const SinglePhotonWavepacket a = wp1.normalized();
  const SinglePhotonWavepacket b = wp2.normalized();
  const auto w = weight_vector(*a.grid);
  complex<double> overlap = 0.0;
  for (Pol p : {Pol::H, Pol::V}) {
    if (a.amp(p).size() == 0 || b.amp(p).size() == 0) continue;
    overlap += (w.array() * a.amp(p).array() * b.amp(p).array().conjugate()).sum();
  }
  return 0.5 * (1.0 - std::norm(overlap));
}

}  // namespace biphoton
