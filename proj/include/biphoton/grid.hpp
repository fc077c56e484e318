#pragma once

#include <memory>
#include <vector>

namespace biphoton {

// Uniform grid of detunings nu = omega - Omega, in units of the single-photon
// bandwidth sigma, with trapezoid quadrature weights. All spectral amplitudes
// in this library are sampled on such a grid.
struct FrequencyGrid {
  double half_width = 0.0;       // grid spans [-half_width, +half_width]
  std::vector<double> values;    // strictly increasing, nu_i = -nu_{n-1-i} exactly
  std::vector<double> weights;   // trapezoid: spacing, halved at the endpoints

  int n() const { return static_cast<int>(values.size()); }
  double spacing() const { return 2.0 * half_width / (n() - 1); }
};

using GridPtr = std::shared_ptr<const FrequencyGrid>;

// Throws std::invalid_argument unless half_width > 0 and n_points >= 2.
GridPtr make_grid(double half_width, int n_points);

// Value comparison; grids from different make_grid calls are compatible when
// they describe the same discretization.
bool same_grid(const FrequencyGrid& a, const FrequencyGrid& b);

}  // namespace biphoton
