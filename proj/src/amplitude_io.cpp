#include "biphoton/amplitude_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "biphoton/errors.hpp"

namespace biphoton {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

template <typename T>
T parse_number(std::string_view token, int line_no, const char* what) {
  T value{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, std::string("cannot parse ") + what + " from '" +
                                  std::string(token) + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) {
      throw ParseError(line_no, std::string(what) + " must be finite");
    }
  }
  return value;
}

void append_double(std::string& out, double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  out.append(buf, ptr);
}

}  // namespace

TwoPhotonState parse_amplitude_file(std::string_view text) {
  GridPtr grid;
  std::array<Eigen::MatrixXcd, 4> mats;
  std::set<std::tuple<int, int, int>> seen;
  int line_no = 0;
  size_t row_count = 0;

  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (!grid) {
      if (tokens[0] != "grid:" || tokens.size() != 3) {
        throw ParseError(line_no, "expected header 'grid: <half_width> <n_points>'");
      }
      const double half_width = parse_number<double>(tokens[1], line_no, "grid half-width");
      const int n_points = parse_number<int>(tokens[2], line_no, "grid point count");
      try {
        grid = make_grid(half_width, n_points);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      for (auto& m : mats) m = Eigen::MatrixXcd::Zero(n_points, n_points);
      continue;
    }

    if (tokens.size() != 5) {
      throw ParseError(line_no, "expected '<channel> <i> <j> <re> <im>'");
    }
    const auto channel = channel_from_string(tokens[0]);
    if (!channel) {
      throw ParseError(line_no, "unknown channel '" + std::string(tokens[0]) +
                                    "' (expected HH, VV, HV or VH)");
    }
    const int i = parse_number<int>(tokens[1], line_no, "row index");
    const int j = parse_number<int>(tokens[2], line_no, "column index");
    if (i < 0 || i >= grid->n() || j < 0 || j >= grid->n()) {
      throw ParseError(line_no, "index out of range for a " + std::to_string(grid->n()) +
                                    "-point grid");
    }
    const double re = parse_number<double>(tokens[3], line_no, "real part");
    const double im = parse_number<double>(tokens[4], line_no, "imaginary part");
    if (!seen.insert({static_cast<int>(*channel), i, j}).second) {
      throw ParseError(line_no, "duplicate entry for " + std::string(to_string(*channel)) + " " +
                                    std::to_string(i) + " " + std::to_string(j));
    }
    mats[static_cast<int>(*channel)](i, j) = {re, im};
    ++row_count;
  }

  if (!grid) throw ParseError(line_no, "missing 'grid:' header");
  if (row_count == 0) throw ParseError(line_no, "no amplitude rows");

  TwoPhotonState state(grid);
  for (Channel c : kAllChannels) state.set_channel(c, mats[static_cast<int>(c)]);
  return state.normalized();
}

void emit_amplitude_file(const TwoPhotonState& state, std::ostream& out) {
  out << amplitude_file_string(state);
}

std::string amplitude_file_string(const TwoPhotonState& state) {
  std::string out = "grid: ";
  append_double(out, state.grid().half_width);
  out += ' ';
  out += std::to_string(state.grid().n());
  out += '\n';
  for (Channel c : kAllChannels) {
    if (!state.has_channel(c)) continue;
    const Eigen::MatrixXcd& m = state.channel(c);
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        const std::complex<double> v = m(i, j);
        if (v == std::complex<double>(0.0, 0.0)) continue;
        out += to_string(c);
        out += ' ';
        out += std::to_string(i);
        out += ' ';
        out += std::to_string(j);
        out += ' ';
        append_double(out, v.real());
        out += ' ';
        append_double(out, v.imag());
        out += '\n';
      }
    }
  }
  return out;
}

}  // namespace biphoton
