#pragma once

// Two-atom ground-manifold rate generator at arbitrary separation.
//
// The excited-manifold amplitudes are eliminated quasistatically: the eight
// one-excitation amplitudes are solved as instantaneous linear functions of
// the four ground amplitudes, and the resulting bilinears feed the 16 coupled
// equations for the ground density matrix.  The generator splits into an
// out part (field-driven depletion) and an in part (spontaneous repopulation,
// single-atom and cross-atom).
//
// Basis ordering, fixed globally: ground pairs (dd, du, ud, uu) with atom 1
// first; density elements vectorized row-major as 4*ket + bra.

#include <iosfwd>

#include "spinpair/analytic.hpp"
#include "spinpair/propagator.hpp"
#include "spinpair/types.hpp"

namespace spinpair {

// Physical drive inputs.  chi is the Rabi frequency of the sigma+ field,
// delta its detuning from the atomic line, gamma the amplitude decay rate
// (half the excited population decay rate), k_L the field wavenumber which
// is identified with the atomic wavenumber in the propagator argument.
struct DriveParams {
  double chi;
  double delta;
  double gamma;
  double k_L;

  DriveParams(double chi_, double delta_, double gamma_, double k_L_);

  double gamma_op() const { return gamma * chi * chi / (delta * delta); }
  bool perturbative() const { return std::abs(chi) < std::abs(delta); }
  PumpScale scale() const { return PumpScale(gamma, chi, delta); }
};

// Relative position of atom 2, atom 1 sitting at the origin.  x = k_L * R21.
struct PairGeometry {
  SphericalPoint separation;

  explicit PairGeometry(double x, double theta = 0.0, double phi = 0.0);

  static PairGeometry parallel(double x) { return PairGeometry(x, 0.0); }
  static PairGeometry perpendicular(double x);

  // Laser phase accumulated at the position of atom 2.
  double drive_phase() const {
    return separation.x * std::cos(separation.theta);
  }
};

// Density matrix over the two-atom ground manifold.
class GroundDensity {
 public:
  static GroundDensity from_matrix(const Matrix4cd& rho);

  // Product of two single-atom superpositions (a|down> + b|up>) per atom.
  static GroundDensity product(double a1, double b1, double a2, double b2);
  static GroundDensity both_down();
  static GroundDensity both_balanced();

  const Matrix4cd& matrix() const { return rho_; }
  complexd entry(int ket, int bra) const { return rho_(ket, bra); }

 private:
  explicit GroundDensity(const Matrix4cd& rho) : rho_(rho) {}
  Matrix4cd rho_;
};

struct GeneratorOptions {
  // Keep the vacuum level shift (imaginary radial part of the propagator)
  // in the amplitude solve.  Repopulation always uses the decay part.
  bool include_im_shift = true;
  // Keep the AC Stark phase of the driven sublevel.  Off by default: the
  // closed-form solutions neglect it.
  bool include_stark = false;
  // Test hook: suppress the laser phase at the position of atom 2 while
  // keeping the exchange propagators; isolates phase-induced dynamics.
  bool zero_drive_phase = false;
};

// Amplitude equations for the eight one-excitation states, in quasistatic
// form A * b_exc + B * b_ground = 0.  Atom-1-excited amplitudes occupy
// indices 0..3 (2*excited + ground2), atom-2-excited 4..7 (4 + 2*ground1
// + excited).
struct AmplitudeSystem {
  Matrix8cd A;
  Matrix8x4cd B;
};

AmplitudeSystem build_amplitude_system(const DriveParams& params,
                                       const PairGeometry& geom,
                                       const GeneratorOptions& options = {});

// Linear map expressing the excited amplitudes through the ground ones,
// b_exc = map * b_ground.  Solved by dense elimination; throws NumericError
// when A is ill-conditioned (condition number > 1e12).
class ExcitedEliminationMap {
 public:
  ExcitedEliminationMap(const Matrix8x4cd& map, double residual,
                        double condition)
      : map_(map), residual_(residual), condition_(condition) {}

  const Matrix8x4cd& matrix() const { return map_; }
  double residual() const { return residual_; }
  double condition() const { return condition_; }

 private:
  Matrix8x4cd map_;
  double residual_;
  double condition_;
};

ExcitedEliminationMap quasistatic_eliminate(const Matrix8cd& A,
                                            const Matrix8x4cd& B);

// Field-driven depletion contribution to the generator.
Matrix16cd out_terms(const ExcitedEliminationMap& map,
                     const DriveParams& params, const PairGeometry& geom,
                     const GeneratorOptions& options = {});

// Repopulation contribution: single-atom branchings plus cross-atom terms
// weighted by the decay part of the propagator.
Matrix16cd in_terms(const ExcitedEliminationMap& map, const DriveParams& params,
                    const PairGeometry& geom);

// The assembled generator rho_dot = L rho.  Trace- and Hermiticity-
// preserving by construction.
class Generator {
 public:
  Generator(const Matrix16cd& matrix, double gamma_op,
            const GeneratorOptions& options);

  const Matrix16cd& matrix() const { return L_; }
  double gamma_op() const { return gamma_op_; }
  const GeneratorOptions& options() const { return options_; }

  Matrix4cd apply(const Matrix4cd& rho) const;

  // Row-major dump, one matrix row per line, entries "re,im" in gamma_op
  // units; used for diffing generators between derivation paths.
  void dump(std::ostream& os) const;

 private:
  Matrix16cd L_;
  double gamma_op_;
  GeneratorOptions options_;
};

Generator assemble_generator(const DriveParams& params,
                             const PairGeometry& geom,
                             const GeneratorOptions& options = {});

// Collective observables.
complexd coherence_expectation(const Matrix4cd& rho);
double population_expectation(const Matrix4cd& rho);
complexd one_atom_coherence(const Matrix4cd& rho);

// Vectorization helpers for the fixed row-major layout.
Vector16cd vec_density(const Matrix4cd& rho);
Matrix4cd unvec_density(const Vector16cd& v);

}  // namespace spinpair
