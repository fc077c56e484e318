#include "biphoton/schmidt.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

#include "biphoton/errors.hpp"
#include "biphoton/spectra.hpp"

namespace biphoton {

namespace {

// Relative floor under which singular values are treated as numerical noise.
constexpr double kSingularCutoff = 1e-12;

void append_singular_values(const Eigen::MatrixXcd& m, std::vector<double>& out) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  out.insert(out.end(), s.data(), s.data() + s.size());
}

}  // namespace

SchmidtReport schmidt_analysis(const TwoPhotonState& state, double tol) {
  if (state.channels().empty()) {
    throw DegenerateState("cannot analyze a zero state");
  }

  const int n = state.grid().n();
  Eigen::VectorXd sqw(n);
  for (int i = 0; i < n; ++i) sqw[i] = std::sqrt(state.grid().weights[i]);
  const auto weighted = [&](Channel c) -> Eigen::MatrixXcd {
    return sqw.asDiagonal() * state.channel(c) * sqw.asDiagonal();
  };

  const bool same_pol_only = !state.has_channel(Channel::HV) && !state.has_channel(Channel::VH);
  const bool cross_pol_only = !state.has_channel(Channel::HH) && !state.has_channel(Channel::VV);

  std::vector<double> values;
  if (same_pol_only || cross_pol_only) {
    // The weighted matrix is (anti-)block-diagonal in polarization; its
    // singular values are exactly the union of the per-block ones.
    for (Channel c : kAllChannels) {
      if (state.has_channel(c)) append_singular_values(weighted(c), values);
    }
  } else {
    Eigen::MatrixXcd m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = weighted(Channel::HH);
    m.topRightCorner(n, n) = weighted(Channel::HV);
    m.bottomLeftCorner(n, n) = weighted(Channel::VH);
    m.bottomRightCorner(n, n) = weighted(Channel::VV);
    append_singular_values(m, values);
  }

  std::sort(values.begin(), values.end(), std::greater<>());
  double total2 = 0.0;
  for (double s : values) total2 += s * s;
  if (!(total2 > 0.0) || !std::isfinite(total2)) {
    throw DegenerateState("cannot analyze a zero state");
  }

  SchmidtReport report;
  const double scale = 1.0 / std::sqrt(total2);
  double sum_p2 = 0.0;
  for (double s : values) {
    const double sn = s * scale;
    if (sn < kSingularCutoff) break;
    report.singular_values.push_back(sn);
    sum_p2 += sn * sn * sn * sn;
  }
  report.schmidt_number = 1.0 / sum_p2;
  report.entangled = report.schmidt_number > 1.0 + tol;
  return report;
}

double spdc_schmidt_number(double beta) {
  if (beta == kBetaInf) return 1.0;
  if (!(beta > 0.0) || std::isnan(beta)) {
    throw UnsupportedParameter("pump bandwidth ratio must be positive");
  }
  const double s = beta / std::sqrt(2.0 + beta * beta);
  return 0.5 * (s + 1.0 / s);
}

}  // namespace biphoton
