#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "biphoton/amplitude_io.hpp"
#include "biphoton/curve_csv.hpp"
#include "biphoton/errors.hpp"
#include "biphoton/scenarios.hpp"
#include "biphoton/schmidt.hpp"
#include "biphoton/splitter.hpp"
#include "biphoton/symmetry.hpp"

namespace {

using namespace biphoton;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitToleranceViolation = 4;

double parse_bandwidth_ratio(const std::string& text) {
  double value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || std::isnan(value)) {
    throw std::invalid_argument("cannot parse bandwidth ratio '" + text + "' (use a number or 'inf')");
  }
  return value;
}

CurveMode parse_mode(const std::string& text) {
  if (text == "numeric") return CurveMode::Numeric;
  if (text == "analytic") return CurveMode::Analytic;
  return CurveMode::Both;
}

std::string format_fixed6(double x) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 6);
  return std::string(buf, ptr);
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << std::flush;
    return std::cout ? kExitOk : kExitIo;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  file << content;
  file.flush();
  if (!file) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

std::string read_input(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw std::ios_base::failure("failed reading '" + path + "'");
  return buffer.str();
}

struct CurveOptions {
  int grid_n = 257;
  double half_width = 6.0;
  double dz_min = -5.0;
  double dz_max = 5.0;
  int steps = 101;
  std::string mode = "both";
  std::string out;
  std::string beta = "inf";
  double delta_l = 5.0;
  double alpha = 0.0;
};

void add_curve_options(CLI::App& cmd, CurveOptions& opt, bool with_beta, bool with_delta_l,
                       bool with_alpha) {
  cmd.add_option("--grid-n", opt.grid_n, "Frequency grid points")->capture_default_str();
  cmd.add_option("--half-width", opt.half_width, "Grid half-width in photon bandwidths")
      ->capture_default_str();
  cmd.add_option("--dz-min", opt.dz_min, "Smallest path difference (c/sigma units)")
      ->capture_default_str();
  cmd.add_option("--dz-max", opt.dz_max, "Largest path difference (c/sigma units)")
      ->capture_default_str();
  cmd.add_option("--steps", opt.steps, "Curve points")->capture_default_str();
  cmd.add_option("--mode", opt.mode, "Columns to compute")
      ->check(CLI::IsMember({"numeric", "analytic", "both"}))
      ->capture_default_str();
  cmd.add_option("--out", opt.out, "Output CSV path (default: standard output)");
  if (with_beta) {
    cmd.add_option("--beta", opt.beta, "Pump-to-photon bandwidth ratio, or 'inf'")
        ->capture_default_str();
  }
  if (with_delta_l) {
    cmd.add_option("--delta-l", opt.delta_l, "Half arm-length difference (c/sigma units)")
        ->capture_default_str();
  }
  if (with_alpha) {
    cmd.add_option("--alpha", opt.alpha, "Phase in radians")->capture_default_str();
  }
}

int run_curve(Scenario scenario, const CurveOptions& opt) {
  const double beta = parse_bandwidth_ratio(opt.beta);
  CurveSpec spec;
  spec.dz_min = opt.dz_min;
  spec.dz_max = opt.dz_max;
  spec.n_steps = opt.steps;
  spec.beta = beta;
  spec.delta_l = opt.delta_l;
  spec.alpha = opt.alpha;
  spec.mode = parse_mode(opt.mode);

  GridPtr grid = make_grid(opt.half_width, opt.grid_n);
  std::vector<CurvePoint> points;
  switch (scenario) {
    case Scenario::Dip:
      points = hom_dip_curve(spec, grid);
      break;
    case Scenario::Interferometer:
      points = interferometer_curve(spec, grid);
      break;
    case Scenario::PolProduct:
      points = pol_product_curve(spec, grid);
      break;
    default:
      points = pol_entangled_curve(spec, grid);
      break;
  }

  if (spec.mode == CurveMode::Both) {
    const double tol = curve_tolerance(scenario, beta);
    for (const CurvePoint& p : points) {
      const double diff = std::abs(*p.pc_numeric - *p.pc_analytic);
      if (diff > tol) {
        std::cerr << "error: numeric/analytic disagreement " << format_number9(diff) << " > "
                  << format_number9(tol) << " at dz=" << format_number9(p.dz) << '\n';
        return kExitToleranceViolation;
      }
    }
  }

  std::ostringstream csv;
  emit_curve_csv(points, csv);
  return write_output(opt.out, csv.str());
}

struct FileOptions {
  std::string in;
  double tol = 1e-6;
  std::string out;
};

int run_classify(const FileOptions& opt) {
  const TwoPhotonState state = parse_amplitude_file(read_input(opt.in));
  const SymmetryReport symmetry = classify_symmetry(state, opt.tol);
  const SchmidtReport schmidt = schmidt_analysis(state, opt.tol);
  const double pc = coincidence_probability_formula(state);

  std::string report;
  report += "symmetry=";
  report += to_string(symmetry.cls);
  report += "\nsymmetric_fraction=";
  report += format_fixed6(symmetry.symmetric_fraction);
  report += "\nantisymmetric_fraction=";
  report += format_fixed6(symmetry.antisymmetric_fraction);
  report += "\nK=";
  report += format_fixed6(schmidt.schmidt_number);
  report += "\npredicted_pc=";
  report += format_fixed6(pc);
  report += '\n';
  return write_output(opt.out, report);
}

int run_schmidt(const FileOptions& opt) {
  const TwoPhotonState state = parse_amplitude_file(read_input(opt.in));
  const SchmidtReport schmidt = schmidt_analysis(state, opt.tol);

  std::string report;
  report += "K=";
  report += format_number9(schmidt.schmidt_number);
  report += "\nentangled=";
  report += schmidt.entangled ? "true" : "false";
  report += '\n';
  const size_t shown = std::min<size_t>(schmidt.singular_values.size(), 16);
  for (size_t i = 0; i < shown; ++i) {
    report += 's';
    report += std::to_string(i);
    report += '=';
    report += format_number9(schmidt.singular_values[i]);
    report += '\n';
  }
  return write_output(opt.out, report);
}

void add_file_options(CLI::App& cmd, FileOptions& opt) {
  cmd.add_option("--in", opt.in, "Amplitude file to read")->required();
  cmd.add_option("--tol", opt.tol, "Classification/entanglement tolerance")
      ->capture_default_str();
  cmd.add_option("--out", opt.out, "Output path (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-photon wavepacket interference at a lossless beam splitter"};
  app.require_subcommand(1);

  CurveOptions dip_opt;
  CLI::App* dip = app.add_subcommand("dip", "Coincidence dip of a down-converted pair");
  add_curve_options(*dip, dip_opt, true, false, false);

  CurveOptions mz_opt;
  mz_opt.beta = "0.02";
  CLI::App* mz = app.add_subcommand(
      "mz", "Down-converted pair with an unbalanced two-path section in beam 1");
  add_curve_options(*mz, mz_opt, true, true, true);

  CurveOptions pol_product_opt;
  CLI::App* pol_product = app.add_subcommand(
      "pol-product", "Independent wavepackets with a wave-plate phase in beam 1");
  add_curve_options(*pol_product, pol_product_opt, false, false, true);

  CurveOptions pol_entangled_opt;
  CLI::App* pol_entangled =
      app.add_subcommand("pol-entangled", "Polarization-entangled photon pair");
  add_curve_options(*pol_entangled, pol_entangled_opt, true, false, true);

  FileOptions classify_opt;
  CLI::App* classify = app.add_subcommand(
      "classify", "Exchange symmetry, entanglement and predicted coincidence of a state file");
  add_file_options(*classify, classify_opt);

  FileOptions schmidt_opt;
  CLI::App* schmidt =
      app.add_subcommand("schmidt", "Entanglement decomposition of a state file");
  add_file_options(*schmidt, schmidt_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  try {
    if (dip->parsed()) return run_curve(Scenario::Dip, dip_opt);
    if (mz->parsed()) return run_curve(Scenario::Interferometer, mz_opt);
    if (pol_product->parsed()) return run_curve(Scenario::PolProduct, pol_product_opt);
    if (pol_entangled->parsed()) return run_curve(Scenario::PolEntangled, pol_entangled_opt);
    if (classify->parsed()) return run_classify(classify_opt);
    if (schmidt->parsed()) return run_schmidt(schmidt_opt);
  } catch (const DegenerateState& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  }
  return kExitOk;
}
