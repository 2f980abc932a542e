#pragma once

// Closed-form results for the driven four-level atom: the single-atom rate
// equations obtained by quasistatic elimination of the excited manifold, and
// the two-atom coherence/population solutions in the small-separation limit.
// These serve as independent oracles for the numerical engine.

#include "spinpair/types.hpp"

namespace spinpair {

// Real superposition a|down> + b|up| with a^2 + b^2 = 1 and a, b >= 0.
struct SuperpositionCoeffs {
  double a;
  double b;

  SuperpositionCoeffs(double a_, double b_);

  static SuperpositionCoeffs balanced();
};

// Drive scales: gamma_op = gamma * chi^2 / delta^2 is the optical pumping
// rate that sets the ground-manifold clock.  The closed forms assume the
// perturbative regime chi << delta and gamma << delta.
struct PumpScale {
  double gamma;
  double chi;
  double delta;
  double gamma_op;

  PumpScale(double gamma_, double chi_, double delta_);

  bool perturbative() const { return std::abs(chi) < std::abs(delta); }
  bool weak_decay() const { return gamma < std::abs(delta); }
};

// Ground-manifold rate matrix of a single driven atom over the components
// (rho_uu, rho_du, rho_dd).  The optional AC Stark phase i chi^2/delta on the
// coherence is off by default.
Matrix3cd single_atom_generator(const PumpScale& scale,
                                bool include_stark = false);

// Excited-manifold elements expressed through the ground ones in the
// quasistatic limit delta >> gamma.
struct SingleAtomQuasistatic {
  complexd rho_aa;    // excited (alpha) population
  complexd rho_bb;    // excited (beta) population, identically 0
  complexd rho_ab;    // excited coherence, identically 0
  complexd rho_a_up;  // alpha-up optical coherence
  complexd rho_d_a;   // down-alpha optical coherence
  complexd rho_a_d;   // alpha-down optical coherence (conjugate expression)
};

SingleAtomQuasistatic single_atom_quasistatic(const PumpScale& scale,
                                              complexd rho_dd,
                                              complexd rho_du);

// Collective ground coherence of two independently decaying atoms prepared
// in the same superposition: 2ab exp(-gamma_op t).
double independent_coherence(double t, const SuperpositionCoeffs& coeffs,
                             const PumpScale& scale);

// Coupled-system coherence at separations much smaller than a wavelength:
// 2ab exp(-2 gamma_op t) [ -a^2 + (1 + a^2) exp((2/3) gamma_op t) ].
double coupled_coherence_smallR(double t, const SuperpositionCoeffs& coeffs,
                                const PumpScale& scale);

// Population transferred into |up,up> starting from |down,down>:
// 1 - (1/3) exp(-(4/3) gamma_op t) (3 + 2 gamma_op t).
double coupled_population_smallR(double t, const PumpScale& scale);

// Independent-atom pumping curve 1 - exp(-(2/3) gamma_op t).
double independent_population(double t, const PumpScale& scale);

// Quasistatic amplitudes of the symmetric one-excitation states driven by
// the symmetric ground amplitudes g_{-1} (both down) and g_0.
struct CoupledBasisAmplitudes {
  complexd s1;    // symmetric alpha-down state
  complexd r1;    // symmetric alpha-up state
  complexd rm1;   // symmetric beta-up state; O((chi/delta)^2), returned as 0
  complexd sm1;   // symmetric beta-down state; identically 0
};

CoupledBasisAmplitudes coupled_basis_quasistatic(const PumpScale& scale,
                                                 complexd g_minus1,
                                                 complexd g_0);

// Initial growth rates of the coherence induced in atom 1 (prepared in a z
// eigenstate) by an x-polarized neighbor, at small separation.  The field
// depletion (out) channel and the repopulation (in) channel are returned
// separately.
enum class ZState { up, down };

struct SwapRates {
  double out_rate;
  double in_rate;
};

SwapRates swap_rates_smallR(ZState initial, const SuperpositionCoeffs& coeffs,
                            const PumpScale& scale);

}  // namespace spinpair
