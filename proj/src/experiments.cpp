#include "spinpair/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace spinpair {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_cell(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> time_grid(double t_max, int samples) {
  std::vector<double> ts(samples);
  for (int k = 0; k < samples; ++k) ts[k] = t_max * k / (samples - 1.0);
  return ts;
}

bool complex_observable(Observable obs) {
  return obs != Observable::population;
}

std::string on_off(bool v) { return v ? "on" : "off"; }

std::string drive_metadata(const DriveSpec& drive,
                           const GeneratorOptions& options) {
  std::ostringstream os;
  const DriveParams p = drive.params();
  os << "params: chi/delta=" << format_cell(drive.chi_over_delta)
     << " gamma/delta=" << format_cell(drive.gamma_over_delta)
     << " gamma_op=" << format_cell(p.gamma_op())
     << " im_shift=" << on_off(options.include_im_shift)
     << " stark=" << on_off(options.include_stark);
  return os.str();
}

}  // namespace

void CsvTable::write(std::ostream& os) const {
  for (const auto& line : metadata) os << "# " << line << "\n";
  for (std::size_t c = 0; c < header.size(); ++c) {
    os << header[c] << (c + 1 < header.size() ? "," : "");
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << format_cell(row[c]) << (c + 1 < row.size() ? "," : "");
    }
    os << "\n";
  }
}

std::string CsvTable::to_string() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

DriveParams DriveSpec::params() const {
  const double gamma = 1.0;
  const double delta = gamma / gamma_over_delta;
  const double chi = chi_over_delta * delta;
  return DriveParams(chi, delta, gamma, 1.0);
}

std::vector<std::string> figure_ids() {
  return {"fig3", "fig4", "fig5", "fig6", "fig7",
          "fig8", "fig9", "fig10", "fig11"};
}

bool figure_is_sweep(const std::string& id) { return id == "fig7"; }

Scenario figure_preset(const std::string& id) {
  Scenario s;
  s.id = id;
  const double bal = kInvSqrt2;
  const double a_lt = 0.1, b_lt = std::sqrt(99.0) / 10.0;

  auto engine_curve = [](std::string label, double x, double theta, double a,
                         double b, Observable obs) {
    CurveSpec c;
    c.label = std::move(label);
    c.x = x;
    c.theta = theta;
    c.a1 = a;
    c.b1 = b;
    c.a2 = a;
    c.b2 = b;
    c.observable = obs;
    return c;
  };
  auto baseline = [](std::string label, double a, double b, Observable obs) {
    CurveSpec c;
    c.label = std::move(label);
    c.analytic = true;
    c.a1 = a;
    c.b1 = b;
    c.a2 = a;
    c.b2 = b;
    c.observable = obs;
    return c;
  };

  if (id == "fig3") {
    s.curves = {engine_curve("coupled", 1e-4, 0.0, bal, bal,
                             Observable::coherence),
                baseline("independent", bal, bal, Observable::coherence)};
  } else if (id == "fig4") {
    s.curves = {engine_curve("coupled_a_lt_b", 1e-4, 0.0, a_lt, b_lt,
                             Observable::coherence),
                engine_curve("coupled_a_gt_b", 1e-4, 0.0, b_lt, a_lt,
                             Observable::coherence),
                baseline("independent", a_lt, b_lt, Observable::coherence)};
  } else if (id == "fig5") {
    s.curves = {engine_curve("coupled", 1e-4, 0.0, 1.0, 0.0,
                             Observable::population),
                baseline("independent", 1.0, 0.0, Observable::population)};
  } else if (id == "fig6" || id == "fig9") {
    const Observable obs =
        id == "fig6" ? Observable::coherence : Observable::population;
    const double a = id == "fig6" ? bal : 1.0;
    const double b = id == "fig6" ? bal : 0.0;
    if (id == "fig9") s.t_max = 10.0;
    s.curves = {engine_curve("parallel", 0.7, 0.0, a, b, obs),
                engine_curve("perpendicular", 0.7, 0.5 * kPi, a, b, obs),
                baseline("independent", a, b, obs)};
  } else if (id == "fig8") {
    s.curves = {engine_curve("parallel_a_lt_b", 1.0, 0.0, a_lt, b_lt,
                             Observable::coherence),
                engine_curve("parallel_a_gt_b", 1.0, 0.0, b_lt, a_lt,
                             Observable::coherence),
                engine_curve("perpendicular_a_lt_b", 1.0, 0.5 * kPi, a_lt,
                             b_lt, Observable::coherence),
                engine_curve("perpendicular_a_gt_b", 1.0, 0.5 * kPi, b_lt,
                             a_lt, Observable::coherence),
                baseline("independent", a_lt, b_lt, Observable::coherence)};
  } else if (id == "fig10" || id == "fig11") {
    const bool down = id == "fig10";
    const double az = down ? 1.0 : 0.0;
    const double bz = down ? 0.0 : 1.0;
    for (double x : {1e-4, 1.0, 2.0}) {
      std::ostringstream label;
      label << "sigma1_x" << (x < 1e-2 ? std::string("_smallR")
                                       : format_cell(x));
      CurveSpec c = engine_curve(label.str(), x, 0.0, bal, bal,
                                 Observable::one_atom_coherence);
      c.a1 = az;
      c.b1 = bz;
      s.curves.push_back(c);
    }
  } else if (id == "fig7") {
    // Distance sweep; dispatched by run_figure.
  } else {
    throw ConfigError("unknown figure id '" + id + "'");
  }
  return s;
}

CsvTable run_scenario(const Scenario& scenario, std::ostream* dump_generator) {
  const std::vector<double> ts = time_grid(scenario.t_max, scenario.samples);
  const DriveParams params = scenario.drive.params();
  const PumpScale scale = params.scale();

  CsvTable table;
  table.metadata = {"spinpair csv v1", "scenario: " + scenario.id,
                    drive_metadata(scenario.drive, scenario.options),
                    "units: time in 1/gamma_op, rates in gamma_op"};
  table.header = {"t_gamma_op"};
  table.rows.assign(ts.size(), {});
  for (std::size_t k = 0; k < ts.size(); ++k) table.rows[k].push_back(ts[k]);

  bool dumped = false;
  for (const auto& curve : scenario.curves) {
    if (curve.analytic) {
      table.header.push_back(curve.label);
      const SuperpositionCoeffs coeffs(curve.a1, curve.b1);
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const double t_phys = ts[k] / scale.gamma_op;
        const double v = curve.observable == Observable::population
                             ? independent_population(t_phys, scale)
                             : independent_coherence(t_phys, coeffs, scale);
        table.rows[k].push_back(v);
      }
      continue;
    }
    const PairGeometry geom(curve.x, curve.theta);
    const Generator gen = assemble_generator(params, geom, scenario.options);
    if (dump_generator && !dumped) {
      gen.dump(*dump_generator);
      dumped = true;
    }
    const GroundDensity rho0 =
        GroundDensity::product(curve.a1, curve.b1, curve.a2, curve.b2);
    const Trajectory traj = propagate(gen, rho0, ts);
    if (complex_observable(curve.observable)) {
      table.header.push_back(curve.label + "_re");
      table.header.push_back(curve.label + "_im");
    } else {
      table.header.push_back(curve.label);
    }
    for (std::size_t k = 0; k < ts.size(); ++k) {
      const Sample& smp = traj.samples()[k];
      if (curve.observable == Observable::population) {
        table.rows[k].push_back(smp.population);
      } else {
        const complexd v = curve.observable == Observable::coherence
                               ? smp.coherence
                               : smp.one_atom;
        table.rows[k].push_back(v.real());
        table.rows[k].push_back(v.imag());
      }
    }
  }
  return table;
}

namespace {

// Decay rate of the selected observable at t_star for one sweep point;
// NaN marks a rate undefined near a zero crossing.
double sweep_point(const SweepSpec& spec, double x) {
  const DriveParams params = spec.drive.params();
  const PairGeometry geom(x, spec.theta);
  const Generator gen = assemble_generator(params, geom, spec.options);
  const GroundDensity rho0 = spec.observable == Observable::population
                                 ? GroundDensity::both_down()
                                 : GroundDensity::both_balanced();
  const Trajectory traj = propagate(gen, rho0, {0.0, spec.t_star});
  return instantaneous_rate(traj, spec.observable, spec.t_star);
}

}  // namespace

CsvTable run_sweep(const SweepSpec& spec) {
  if (!(spec.x_min > 0.0) || !(spec.x_max > spec.x_min)) {
    throw ConfigError("sweep: requires 0 < x_min < x_max");
  }
  if (spec.samples < 2) throw ConfigError("sweep: requires samples >= 2");

  std::vector<double> xs(spec.samples);
  for (int k = 0; k < spec.samples; ++k) {
    xs[k] = spec.x_min + (spec.x_max - spec.x_min) * k / (spec.samples - 1.0);
  }

  std::vector<double> rates(spec.samples, kNaN);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < spec.samples;) {
      try {
        rates[i] = sweep_point(spec, xs[i]);
      } catch (const NumericError&) {
        rates[i] = kNaN;  // undefined rate, emitted as an empty cell
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int nthreads = static_cast<int>(
      std::min<unsigned>(hw, static_cast<unsigned>(spec.samples)));
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  const bool parallel = std::abs(spec.theta) < 1e-12;
  CsvTable table;
  table.metadata = {
      "spinpair csv v1",
      "sweep: rate of " +
          std::string(spec.observable == Observable::population ? "population"
                                                                : "coherence") +
          " at t* = " + format_cell(spec.t_star),
      drive_metadata(spec.drive, spec.options),
      "units: x = k_L*R21, rates in gamma_op"};
  table.header = {"x", parallel ? "rate_parallel" : "rate_perpendicular",
                  "independent"};
  for (int k = 0; k < spec.samples; ++k) {
    table.rows.push_back({xs[k], rates[k], 1.0});
  }
  return table;
}

CsvTable run_figure(const std::string& id, const FigureOptions& opts) {
  if (figure_is_sweep(id)) {
    SweepSpec spec;
    if (opts.im_shift) spec.options.include_im_shift = *opts.im_shift;
    if (opts.stark) spec.options.include_stark = *opts.stark;
    spec.samples = 200;
    CsvTable par = run_sweep(spec);
    spec.theta = 0.5 * kPi;
    const CsvTable perp = run_sweep(spec);
    CsvTable merged;
    merged.metadata = par.metadata;
    merged.metadata[1] = "scenario: fig7 (decoherence rate vs distance)";
    merged.header = {"x", "rate_parallel", "rate_perpendicular", "independent"};
    for (std::size_t k = 0; k < par.rows.size(); ++k) {
      merged.rows.push_back(
          {par.rows[k][0], par.rows[k][1], perp.rows[k][1], 1.0});
    }
    return merged;
  }
  Scenario s = figure_preset(id);
  if (opts.im_shift) s.options.include_im_shift = *opts.im_shift;
  if (opts.stark) s.options.include_stark = *opts.stark;
  CsvTable table = run_scenario(s, opts.dump_generator);
  if (id == "fig10" || id == "fig11") {
    table.metadata.push_back(
        "atom2 superposition: a=b=1/sqrt(2) (not fixed by the reference "
        "curves; recorded here)");
  }
  return table;
}

CsvTable run_swap(ZState initial, const SuperpositionCoeffs& coeffs,
                  const std::vector<double>& xs, double theta,
                  const DriveSpec& drive, double t_max, int samples) {
  Scenario s;
  s.id = initial == ZState::up ? "swap_up" : "swap_down";
  s.drive = drive;
  s.t_max = t_max;
  s.samples = samples;
  for (double x : xs) {
    CurveSpec c;
    c.label = "sigma1_x" + format_cell(x);
    c.x = x;
    c.theta = theta;
    c.a1 = initial == ZState::down ? 1.0 : 0.0;
    c.b1 = initial == ZState::down ? 0.0 : 1.0;
    c.a2 = coeffs.a;
    c.b2 = coeffs.b;
    c.observable = Observable::one_atom_coherence;
    s.curves.push_back(c);
  }
  CsvTable table = run_scenario(s);
  table.metadata.push_back("atom2 superposition: a=" + format_cell(coeffs.a) +
                           " b=" + format_cell(coeffs.b));
  return table;
}

CsvTable propagator_table(const SphericalPoint& point) {
  const PropagatorMatrix G = propagator_matrix(point);
  CsvTable table;
  table.metadata = {"spinpair csv v1",
                    "propagator at x=" + format_cell(point.x) +
                        " theta=" + format_cell(point.theta) +
                        " phi=" + format_cell(point.phi)};
  table.header = {"q", "q_prime", "re", "im"};
  for (int q = -1; q <= 1; ++q) {
    for (int qp = -1; qp <= 1; ++qp) {
      const complexd v = G(q, qp);
      table.rows.push_back({static_cast<double>(q), static_cast<double>(qp),
                            v.real(), v.imag()});
    }
  }
  return table;
}

}  // namespace spinpair
