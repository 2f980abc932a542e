#pragma once

// Vacuum photon-exchange propagator between the Zeeman transitions of two
// atoms, G_{qq'}(x, theta, phi) with q, q' in {-1, 0, +1} and x = k0 R.
// Built from the spherical Hankel functions h0, h2 (first kind) and the
// l = 0, 2 spherical harmonics.  The real (Bessel j) part modifies decay
// rates; the imaginary (Neumann y) part is the vacuum-induced level shift.

#include <array>

#include "spinpair/types.hpp"

namespace spinpair {

// Separation of the second atom in spherical coordinates.  x = k0*R must be
// strictly positive: the propagator is singular at coincident atoms.
struct SphericalPoint {
  double x;
  double theta;
  double phi;

  SphericalPoint(double x_, double theta_, double phi_);
};

// h0(x) = sin(x)/x - i cos(x)/x,  x > 0.
complexd spherical_hankel_h0(double x);

// h2(x) = j2(x) + i y2(x),  x > 0.  j2 switches to a truncated power series
// below x = 1e-2 where the closed trigonometric form cancels catastrophically.
complexd spherical_hankel_h2(double x);

// Order-2 spherical Bessel function with the same series crossover as h2.
double spherical_bessel_j2(double x);

// Orthonormal spherical harmonics, Condon-Shortley phase.  Only the pairs
// (0,0), (2,0), (2,+-1), (2,+-2) are supported.
complexd spherical_harmonic(int l, int m, double theta, double phi);

// All nine entries, indexed by polarization pair.  The three symmetry
// relations G(-1,-1) = G(1,1), G(0,-1) = -G(1,0), G(0,1) = -G(-1,0) hold
// bit-exactly because those entries are defined through them.
class PropagatorMatrix {
 public:
  complexd operator()(int q, int q_prime) const {
    return g_[3 * (q + 1) + (q_prime + 1)];
  }

  double max_abs() const;

 private:
  friend PropagatorMatrix propagator_matrix(const SphericalPoint&);
  friend PropagatorMatrix propagator_matrix_decay(const SphericalPoint&);
  static PropagatorMatrix from_radial(complexd h0, complexd h2,
                                      const SphericalPoint& point);
  std::array<complexd, 9> g_{};
};

// Single entry of the exchange matrix.
complexd propagator(int q, int q_prime, const SphericalPoint& point);

// Full complex matrix (decay part + level shift).
PropagatorMatrix propagator_matrix(const SphericalPoint& point);

// Decay part only: radial factors restricted to the spherical Bessel
// functions j0, j2.  This is the tensor that weights repopulation, and the
// exchange tensor when the level shift is switched off.
PropagatorMatrix propagator_matrix_decay(const SphericalPoint& point);

}  // namespace spinpair
