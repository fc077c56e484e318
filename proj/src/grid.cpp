#include "biphoton/grid.hpp"

#include <cmath>
#include <memory>

#include "biphoton/errors.hpp"

namespace biphoton {

GridPtr make_grid(double half_width, int n_points) {
  if (!std::isfinite(half_width) || half_width <= 0.0) {
    throw std::invalid_argument("grid half_width must be positive and finite");
  }
  if (n_points < 2) {
    throw std::invalid_argument("grid needs at least 2 points");
  }

  auto grid = std::make_shared<FrequencyGrid>();
  grid->half_width = half_width;
  grid->values.resize(n_points);
  grid->weights.resize(n_points);

  const double h = 2.0 * half_width / (n_points - 1);
  // Fill from both ends so that values[i] == -values[n-1-i] exactly.
  for (int i = 0; i < n_points / 2; ++i) {
    const double v = -half_width + i * h;
    grid->values[i] = v;
    grid->values[n_points - 1 - i] = -v;
  }
  if (n_points % 2 == 1) {
    grid->values[n_points / 2] = 0.0;
  }
  for (int i = 0; i < n_points; ++i) {
    grid->weights[i] = (i == 0 || i == n_points - 1) ? h / 2.0 : h;
  }
  return grid;
}

bool same_grid(const FrequencyGrid& a, const FrequencyGrid& b) {
  return &a == &b || (a.half_width == b.half_width && a.values.size() == b.values.size());
}

}  // namespace biphoton
