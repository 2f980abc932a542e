#include "spinpair/analytic.hpp"

#include <cmath>

namespace spinpair {

namespace {
constexpr complexd kI(0.0, 1.0);
}

SuperpositionCoeffs::SuperpositionCoeffs(double a_, double b_) : a(a_), b(b_) {
  if (a < 0.0 || b < 0.0) {
    throw std::invalid_argument("SuperpositionCoeffs: a, b must be >= 0");
  }
  if (std::abs(a * a + b * b - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "SuperpositionCoeffs: requires a^2 + b^2 = 1 (within 1e-12)");
  }
}

SuperpositionCoeffs SuperpositionCoeffs::balanced() {
  return SuperpositionCoeffs(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
}

PumpScale::PumpScale(double gamma_, double chi_, double delta_)
    : gamma(gamma_), chi(chi_), delta(delta_) {
  if (!(gamma > 0.0)) throw std::invalid_argument("PumpScale: gamma must be > 0");
  if (delta == 0.0) throw std::invalid_argument("PumpScale: delta must be nonzero");
  gamma_op = gamma * chi * chi / (delta * delta);
}

Matrix3cd single_atom_generator(const PumpScale& scale, bool include_stark) {
  // Components ordered (rho_uu, rho_du, rho_dd).
  Matrix3cd m = Matrix3cd::Zero();
  const double gop = scale.gamma_op;
  m(0, 2) = complexd(2.0 / 3.0 * gop, 0.0);
  m(1, 1) = complexd(-gop, 0.0);
  if (include_stark) {
    m(1, 1) += kI * scale.chi * scale.chi / scale.delta;
  }
  m(2, 2) = complexd(-2.0 / 3.0 * gop, 0.0);
  return m;
}

SingleAtomQuasistatic single_atom_quasistatic(const PumpScale& scale,
                                              complexd rho_dd,
                                              complexd rho_du) {
  const double chi = scale.chi, delta = scale.delta, gamma = scale.gamma;
  const complexd optical = complexd(chi / delta, gamma * chi / (delta * delta));
  SingleAtomQuasistatic q;
  q.rho_aa = (chi * chi / (delta * delta)) * rho_dd;
  q.rho_bb = complexd(0.0, 0.0);
  q.rho_ab = complexd(0.0, 0.0);
  q.rho_a_up = optical * rho_du;
  q.rho_d_a = optical * rho_dd;
  q.rho_a_d = std::conj(optical) * rho_dd;
  return q;
}

double independent_coherence(double t, const SuperpositionCoeffs& coeffs,
                             const PumpScale& scale) {
  const double tau = scale.gamma_op * t;
  return 2.0 * coeffs.a * coeffs.b * std::exp(-tau);
}

double coupled_coherence_smallR(double t, const SuperpositionCoeffs& coeffs,
                                const PumpScale& scale) {
  const double tau = scale.gamma_op * t;
  const double a2 = coeffs.a * coeffs.a;
  return 2.0 * coeffs.a * coeffs.b * std::exp(-2.0 * tau) *
         (-a2 + (1.0 + a2) * std::exp(2.0 / 3.0 * tau));
}

double coupled_population_smallR(double t, const PumpScale& scale) {
  const double tau = scale.gamma_op * t;
  return 1.0 - std::exp(-4.0 / 3.0 * tau) * (3.0 + 2.0 * tau) / 3.0;
}

double independent_population(double t, const PumpScale& scale) {
  const double tau = scale.gamma_op * t;
  return 1.0 - std::exp(-2.0 / 3.0 * tau);
}

CoupledBasisAmplitudes coupled_basis_quasistatic(const PumpScale& scale,
                                                 complexd g_minus1,
                                                 complexd g_0) {
  const double gamma = scale.gamma, chi = scale.chi, delta = scale.delta;
  const complexd L5 = complexd(5.0 / 3.0 * gamma, delta);
  CoupledBasisAmplitudes amps;
  amps.s1 = kI * std::sqrt(2.0) * chi * L5 /
            (L5 * L5 - gamma * gamma / 9.0) * g_minus1;
  amps.r1 = kI * chi / (complexd(4.0 / 3.0 * gamma, delta)) * g_0;
  amps.rm1 = complexd(0.0, 0.0);
  amps.sm1 = complexd(0.0, 0.0);
  return amps;
}

SwapRates swap_rates_smallR(ZState initial, const SuperpositionCoeffs& coeffs,
                            const PumpScale& scale) {
  const double ab = coeffs.a * coeffs.b;
  SwapRates rates;
  rates.out_rate = -scale.gamma_op * ab / 3.0;
  rates.in_rate =
      (initial == ZState::down) ? 2.0 / 3.0 * scale.gamma_op * ab : 0.0;
  return rates;
}

}  // namespace spinpair
