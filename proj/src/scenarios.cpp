#include "biphoton/scenarios.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "biphoton/errors.hpp"
#include "biphoton/spectra.hpp"
#include "biphoton/splitter.hpp"

namespace biphoton {

namespace {

void check_curve_spec(const CurveSpec& spec) {
  if (!std::isfinite(spec.dz_min) || !std::isfinite(spec.dz_max) || spec.dz_min >= spec.dz_max) {
    throw std::invalid_argument("curve range needs dz_min < dz_max, both finite");
  }
  if (spec.n_steps < 2) {
    throw std::invalid_argument("curve needs at least 2 steps");
  }
}

void check_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw UnsupportedParameter(std::string(name) + " must be finite");
  }
}

// Endpoint-exact bilinear blend; hits 0 exactly on symmetric ranges.
double curve_dz(const CurveSpec& spec, int i) {
  const double n1 = spec.n_steps - 1;
  return (spec.dz_min * (n1 - i) + spec.dz_max * i) / n1;
}

double numeric_pc(const TwoPhotonState& input) {
  return coincidence_probability(transform(input, fifty_fifty()));
}

template <typename StateFn, typename ClosedFn>
std::vector<CurvePoint> make_curve(const CurveSpec& spec, StateFn state_at, ClosedFn closed_at) {
  check_curve_spec(spec);
  std::vector<CurvePoint> points;
  points.reserve(spec.n_steps);
  for (int i = 0; i < spec.n_steps; ++i) {
    CurvePoint point;
    point.dz = curve_dz(spec, i);
    if (spec.mode != CurveMode::Analytic) point.pc_numeric = numeric_pc(state_at(point.dz));
    if (spec.mode != CurveMode::Numeric) point.pc_analytic = closed_at(point.dz);
    points.push_back(std::move(point));
  }
  return points;
}

}  // namespace

TwoPhotonState dip_input_state(GridPtr grid, double beta, double dz) {
  check_finite(dz, "path difference");
  return apply_path_phase(build_spdc_spectrum(std::move(grid), beta), -dz / 2.0, dz / 2.0);
}

TwoPhotonState interferometer_input_state(GridPtr grid, double beta, double delta_l,
                                          double alpha, double dz) {
  check_finite(delta_l, "arm difference");
  check_finite(alpha, "carrier phase");
  check_finite(dz, "path difference");
  TwoPhotonState state = build_spdc_spectrum(std::move(grid), beta);
  state = apply_interferometer(state, delta_l, alpha);
  return apply_path_phase(state, -dz / 2.0, dz / 2.0);
}

TwoPhotonState pol_product_input_state(GridPtr grid, double alpha, double dz) {
  check_finite(alpha, "wave-plate phase");
  check_finite(dz, "path difference");
  const Eigen::VectorXcd f = gaussian_packet(*grid);
  SinglePhotonWavepacket wp1{grid, {f, std::polar(1.0, alpha) * f}};
  SinglePhotonWavepacket wp2{grid, {f, f}};
  return apply_path_phase(product_state(wp1, wp2), -dz / 2.0, dz / 2.0);
}

TwoPhotonState pol_entangled_input_state(GridPtr grid, double beta, double alpha, double dz) {
  check_finite(alpha, "relative phase");
  check_finite(dz, "path difference");
  const TwoPhotonState pair = build_spdc_spectrum(grid, beta);
  const Eigen::MatrixXcd& q = pair.channel(Channel::HH);
  TwoPhotonState state(std::move(grid));
  state.set_channel(Channel::HV, q);
  state.set_channel(Channel::VH, std::polar(1.0, alpha) * q);
  return apply_path_phase(state.normalized(), -dz / 2.0, dz / 2.0);
}

double dip_closed_form(double dz) { return 0.5 * (1.0 - std::exp(-0.5 * dz * dz)); }

double interferometer_closed_form(double dz, double delta_l, double alpha, double beta) {
  check_finite(dz, "path difference");
  check_finite(delta_l, "arm difference");
  check_finite(alpha, "carrier phase");
  if (std::isnan(beta) || beta < 0.0) {
    throw UnsupportedParameter("pump bandwidth ratio must be >= 0");
  }
  // beta -> +inf limits: both spectral ratios tend to 1.
  const double r1 = beta == kBetaInf ? 1.0 : beta * beta / (2.0 + beta * beta);
  const double r2 = beta == kBetaInf ? 1.0 : (1.0 + beta * beta) / (2.0 + beta * beta);

  const double c2a = std::cos(2.0 * alpha);
  const double b = 0.5 * (1.0 + c2a * std::exp(-r2 * delta_l * delta_l));
  if (b < 1e-12) {
    throw DegenerateNormalization("two-path section annihilates the state");
  }
  const double bracket = c2a * std::exp(-0.5 * (r1 * delta_l * delta_l + dz * dz)) +
                         0.5 * std::exp(-0.5 * (delta_l + dz) * (delta_l + dz)) +
                         0.5 * std::exp(-0.5 * (delta_l - dz) * (delta_l - dz));
  return 0.5 * (1.0 - bracket / (2.0 * b));
}

double pol_product_closed_form(double dz, double alpha) {
  return 0.5 * (1.0 - 0.5 * (1.0 + std::cos(alpha)) * std::exp(-0.5 * dz * dz));
}

double pol_entangled_closed_form(double dz, double alpha) {
  return 0.5 * (1.0 - std::cos(alpha) * std::exp(-0.5 * dz * dz));
}

std::vector<CurvePoint> hom_dip_curve(const CurveSpec& spec, GridPtr grid) {
  return make_curve(
      spec, [&](double dz) { return dip_input_state(grid, spec.beta, dz); },
      [](double dz) { return dip_closed_form(dz); });
}

std::vector<CurvePoint> interferometer_curve(const CurveSpec& spec, GridPtr grid) {
  return make_curve(
      spec,
      [&](double dz) {
        return interferometer_input_state(grid, spec.beta, spec.delta_l, spec.alpha, dz);
      },
      [&](double dz) {
        return interferometer_closed_form(dz, spec.delta_l, spec.alpha, spec.beta);
      });
}

std::vector<CurvePoint> pol_product_curve(const CurveSpec& spec, GridPtr grid) {
  return make_curve(
      spec, [&](double dz) { return pol_product_input_state(grid, spec.alpha, dz); },
      [&](double dz) { return pol_product_closed_form(dz, spec.alpha); });
}

std::vector<CurvePoint> pol_entangled_curve(const CurveSpec& spec, GridPtr grid) {
  return make_curve(
      spec, [&](double dz) { return pol_entangled_input_state(grid, spec.beta, spec.alpha, dz); },
      [&](double dz) { return pol_entangled_closed_form(dz, spec.alpha); });
}

double curve_tolerance(Scenario scenario, double beta) {
  const bool resolved = beta == kBetaInf || beta >= 0.2;
  switch (scenario) {
    case Scenario::Dip:
    case Scenario::Interferometer:
      return resolved ? 1e-3 : 2e-2;
    case Scenario::PolProduct:
      return 1e-6;
    default:
      return resolved ? 1e-6 : 2e-2;
  }
}

}  // namespace biphoton
