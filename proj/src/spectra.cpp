#include "biphoton/spectra.hpp"

#include <cmath>
#include <complex>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

using std::complex;

Eigen::Map<const Eigen::VectorXd> value_vector(const FrequencyGrid& grid) {
  return {grid.values.data(), static_cast<Eigen::Index>(grid.values.size())};
}

Eigen::VectorXcd phase_vector(const FrequencyGrid& grid, double z) {
  const auto nu = value_vector(grid);
  return ((complex<double>(0.0, 1.0) * z) * nu.cast<complex<double>>().array()).exp();
}

}  // namespace

Eigen::VectorXcd gaussian_packet(const FrequencyGrid& grid) {
  const auto nu = value_vector(grid);
  Eigen::VectorXd f = (-0.5 * nu.array().square()).exp();
  const auto w = Eigen::Map<const Eigen::VectorXd>(grid.weights.data(), grid.n());
  const double n2 = w.dot(f.cwiseAbs2());
  return (f / std::sqrt(n2)).cast<complex<double>>();
}

TwoPhotonState build_spdc_spectrum(GridPtr grid, double beta) {
  if (!grid) throw std::invalid_argument("build_spdc_spectrum needs a grid");
  if (std::isnan(beta) || (beta != kBetaInf && beta < kBetaMin)) {
    throw UnsupportedParameter(
        "pump bandwidth ratio must be >= 0.02 (or +inf for an unfiltered pump)");
  }

  const auto nu = value_vector(*grid);
  const Eigen::VectorXd f = (-0.5 * nu.array().square()).exp();
  Eigen::MatrixXd c = f * f.transpose();
  if (beta != kBetaInf) {
    const double inv2b2 = 1.0 / (2.0 * beta * beta);
    const int n = grid->n();
    Eigen::MatrixXd sum2 = nu.replicate(1, n) + nu.transpose().replicate(n, 1);
    c.array() *= (-inv2b2 * sum2.array().square()).exp();
  }

  TwoPhotonState state(std::move(grid));
  state.set_channel(Channel::HH, c.cast<complex<double>>());
  return state.normalized();
}

TwoPhotonState product_state(const SinglePhotonWavepacket& wp1,
                             const SinglePhotonWavepacket& wp2) {
  if (!wp1.grid || !wp2.grid || !same_grid(*wp1.grid, *wp2.grid)) {
    throw IncompatibleGrids("product_state needs wavepackets on one grid");
  }
  TwoPhotonState state(wp1.grid);
  for (Pol p : {Pol::H, Pol::V}) {
    const auto& a = wp1.amp(p);
    if (a.size() == 0) continue;
    for (Pol q : {Pol::H, Pol::V}) {
      const auto& b = wp2.amp(q);
      if (b.size() == 0) continue;
      state.set_channel(make_channel(p, q), a * b.transpose());
    }
  }
  return state.normalized();
}

TwoPhotonState apply_path_phase(const TwoPhotonState& state, double z1, double z2) {
  const Eigen::VectorXcd e1 = phase_vector(state.grid(), z1);
  const Eigen::VectorXcd e2 = phase_vector(state.grid(), z2);
  TwoPhotonState out(state.grid_ptr());
  for (const auto& [c, m] : state.channels()) {
    out.set_channel(c, e1.asDiagonal() * m * e2.asDiagonal());
  }
  return out;
}

TwoPhotonState apply_interferometer(const TwoPhotonState& state, double delta_l, double alpha) {
  const auto nu = value_vector(state.grid());
  const Eigen::VectorXd gate = (delta_l * nu.array() + alpha).cos();

  const double before = state.squared_norm();
  TwoPhotonState out(state.grid_ptr());
  for (const auto& [c, m] : state.channels()) {
    out.set_channel(c, gate.cast<std::complex<double>>().asDiagonal() * m);
  }
  const double after = out.squared_norm();
  if (!(before > 0.0) || after / before < 1e-12) {
    throw DegenerateState("two-path section annihilates the state");
  }
  return out.normalized();
}

}  // namespace biphoton
