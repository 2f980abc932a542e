#pragma once

// Scenario definitions reproducing the figure curves, distance sweeps, and
// polarization-swap runs, all emitted as deterministic CSV tables.

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinpair/integrator.hpp"

namespace spinpair {

// CSV with '#'-prefixed metadata lines, a header row, and numeric cells
// printed with 12 significant digits.  NaN cells are written empty.
struct CsvTable {
  std::vector<std::string> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  void write(std::ostream& os) const;
  std::string to_string() const;
};

// Drive regime expressed through the two dimensionless ratios; the engine
// runs with gamma = 1 and k_L = 1.
struct DriveSpec {
  double chi_over_delta = 0.1;
  double gamma_over_delta = 1e-3;

  DriveParams params() const;
};

// One plotted curve: either an engine run at a given geometry and initial
// product state, or an analytic independent-atom baseline.
struct CurveSpec {
  std::string label;
  bool analytic = false;
  double x = 1e-4;
  double theta = 0.0;
  double a1 = 0.0, b1 = 1.0;  // atom 1 amplitudes (down, up)
  double a2 = 0.0, b2 = 1.0;  // atom 2 amplitudes
  Observable observable = Observable::coherence;
};

struct Scenario {
  std::string id = "custom";
  DriveSpec drive;
  GeneratorOptions options{.include_im_shift = false, .include_stark = false};
  double t_max = 3.0;
  int samples = 301;
  std::vector<CurveSpec> curves;
};

struct SweepSpec {
  double x_min = 0.05;
  double x_max = 10.0;
  int samples = 100;
  double theta = 0.0;  // 0 = parallel, pi/2 = perpendicular
  double t_star = 1.0;
  Observable observable = Observable::coherence;
  DriveSpec drive;
  GeneratorOptions options{.include_im_shift = false, .include_stark = false};
};

// Built-in figure presets fig3..fig11.  fig7 is a distance sweep and is
// dispatched separately by run_figure.
Scenario figure_preset(const std::string& id);
bool figure_is_sweep(const std::string& id);
std::vector<std::string> figure_ids();

struct FigureOptions {
  std::optional<bool> im_shift;
  std::optional<bool> stark;
  std::ostream* dump_generator = nullptr;  // first engine curve, debug aid
};

CsvTable run_scenario(const Scenario& scenario,
                      std::ostream* dump_generator = nullptr);
CsvTable run_sweep(const SweepSpec& spec);
CsvTable run_figure(const std::string& id, const FigureOptions& opts = {});

// Coherence induced in atom 1 (initially a z eigenstate) by an x-polarized
// atom 2, one column pair per separation in xs.
CsvTable run_swap(ZState initial, const SuperpositionCoeffs& coeffs,
                  const std::vector<double>& xs, double theta = 0.0,
                  const DriveSpec& drive = {}, double t_max = 3.0,
                  int samples = 301);

// The 3x3 exchange matrix tabulated as (q, q', re, im) rows.
CsvTable propagator_table(const SphericalPoint& point);

}  // namespace spinpair
