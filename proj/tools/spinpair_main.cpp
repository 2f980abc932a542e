// Command-line front end: figure presets, distance sweeps, polarization-swap
// runs, propagator tables, and config-driven runs, all emitted as CSV.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "spinpair/config.hpp"
#include "spinpair/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

void emit(const spinpair::CsvTable& table, const std::string& out_path) {
  if (out_path.empty()) {
    table.write(std::cout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw spinpair::ConfigError("cannot open output file '" + out_path + "'");
  }
  table.write(out);
}

std::optional<bool> tri_state(const std::string& v, const std::string& flag) {
  if (v.empty()) return std::nullopt;
  if (v == "on") return true;
  if (v == "off") return false;
  throw spinpair::ConfigError(flag + ": expected 'on' or 'off'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinpair: cooperative decoherence of two driven four-level "
               "atoms coupled through the vacuum"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "output CSV path (default: stdout)")
      ->capture_default_str();

  // figure
  auto* figure = app.add_subcommand("figure", "run a built-in figure preset");
  std::string figure_id;
  std::string im_shift_flag, stark_flag, dump_path;
  figure->add_option("id", figure_id, "one of fig3..fig11")->required();
  figure->add_option("--im-shift", im_shift_flag,
                     "include the vacuum level shift (on|off)");
  figure->add_option("--stark", stark_flag, "include the AC Stark phase");
  figure->add_option("--dump-generator", dump_path,
                     "debug: dump the first generator (gamma_op units)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "decay rate vs separation");
  spinpair::SweepSpec sweep_spec;
  std::string sweep_orientation = "parallel";
  std::string sweep_observable = "coherence";
  sweep->add_option("--x-min", sweep_spec.x_min, "smallest k_L*R21 (> 0)")
      ->capture_default_str();
  sweep->add_option("--x-max", sweep_spec.x_max, "largest k_L*R21")
      ->capture_default_str();
  sweep->add_option("--samples", sweep_spec.samples, "number of sweep points")
      ->capture_default_str();
  sweep->add_option("--orientation", sweep_orientation,
                    "parallel|perpendicular")
      ->capture_default_str();
  sweep->add_option("--t-star", sweep_spec.t_star,
                    "evaluation time in 1/gamma_op")
      ->capture_default_str();
  sweep->add_option("--observable", sweep_observable,
                    "coherence|population")
      ->capture_default_str();

  // swap
  auto* swap = app.add_subcommand("swap", "polarization transfer to a z atom");
  std::string swap_initial = "down";
  double swap_a = 1.0 / std::sqrt(2.0), swap_b = 1.0 / std::sqrt(2.0);
  std::vector<double> swap_xs{1e-4, 1.0, 2.0};
  std::string swap_orientation = "parallel";
  swap->add_option("--initial", swap_initial, "atom 1 z state (up|down)")
      ->capture_default_str();
  swap->add_option("--a", swap_a, "atom 2 down amplitude")
      ->capture_default_str();
  swap->add_option("--b", swap_b, "atom 2 up amplitude")
      ->capture_default_str();
  swap->add_option("--x", swap_xs, "separation list k_L*R21")
      ->capture_default_str();
  swap->add_option("--orientation", swap_orientation,
                   "parallel|perpendicular")
      ->capture_default_str();

  // propagator
  auto* prop = app.add_subcommand("propagator",
                                  "tabulate the 3x3 exchange matrix");
  double prop_x = 0.7, prop_theta = 0.0, prop_phi = 0.0;
  prop->add_option("--x", prop_x, "k_0*R21 (> 0)")->capture_default_str();
  prop->add_option("--theta", prop_theta, "polar angle in radians")
      ->capture_default_str();
  prop->add_option("--phi", prop_phi, "azimuth in radians")
      ->capture_default_str();

  // run (config file)
  auto* run = app.add_subcommand("run", "run a scenario from a config file");
  std::string config_path;
  run->add_option("config", config_path, "path to a key = value config file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*figure) {
      spinpair::FigureOptions opts;
      opts.im_shift = tri_state(im_shift_flag, "--im-shift");
      opts.stark = tri_state(stark_flag, "--stark");
      std::ofstream dump_stream;
      if (!dump_path.empty()) {
        if (spinpair::figure_is_sweep(figure_id)) {
          throw spinpair::ConfigError(
              "--dump-generator is not available for sweep presets");
        }
        dump_stream.open(dump_path);
        if (!dump_stream) {
          throw spinpair::ConfigError("cannot open dump file '" + dump_path +
                                      "'");
        }
        opts.dump_generator = &dump_stream;
      }
      emit(spinpair::run_figure(figure_id, opts), out_path);
    } else if (*sweep) {
      if (sweep_orientation == "perpendicular") {
        sweep_spec.theta = 1.57079632679489661923;
      } else if (sweep_orientation != "parallel") {
        throw spinpair::ConfigError(
            "--orientation: expected 'parallel' or 'perpendicular'");
      }
      if (sweep_observable == "population") {
        sweep_spec.observable = spinpair::Observable::population;
      } else if (sweep_observable != "coherence") {
        throw spinpair::ConfigError(
            "--observable: expected 'coherence' or 'population'");
      }
      emit(spinpair::run_sweep(sweep_spec), out_path);
    } else if (*swap) {
      spinpair::ZState initial;
      if (swap_initial == "up") {
        initial = spinpair::ZState::up;
      } else if (swap_initial == "down") {
        initial = spinpair::ZState::down;
      } else {
        throw spinpair::ConfigError("--initial: expected 'up' or 'down'");
      }
      double theta = 0.0;
      if (swap_orientation == "perpendicular") {
        theta = 1.57079632679489661923;
      } else if (swap_orientation != "parallel") {
        throw spinpair::ConfigError(
            "--orientation: expected 'parallel' or 'perpendicular'");
      }
      const spinpair::SuperpositionCoeffs coeffs(swap_a, swap_b);
      emit(spinpair::run_swap(initial, coeffs, swap_xs, theta), out_path);
    } else if (*prop) {
      emit(spinpair::propagator_table(
               spinpair::SphericalPoint(prop_x, prop_theta, prop_phi)),
           out_path);
    } else if (*run) {
      const spinpair::ParsedConfig parsed =
          spinpair::parse_config(config_path);
      if (std::holds_alternative<spinpair::Scenario>(parsed)) {
        emit(spinpair::run_scenario(std::get<spinpair::Scenario>(parsed)),
             out_path);
      } else {
        emit(spinpair::run_sweep(std::get<spinpair::SweepSpec>(parsed)),
             out_path);
      }
    }
  } catch (const spinpair::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const spinpair::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::domain_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
