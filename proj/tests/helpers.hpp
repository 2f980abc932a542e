#pragma once

// Test-only oracles.  Everything here is written independently of the
// library code paths it checks: series evaluations instead of libm
// trigonometry, the factorial Clebsch-Gordan formula, an operator-algebra
// construction of the generator, and a Runge-Kutta propagator.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "spinpair/angular.hpp"
#include "spinpair/engine.hpp"

namespace oracle {

using spinpair::complexd;
using spinpair::Matrix16cd;
using spinpair::Matrix4cd;
using spinpair::Matrix8cd;
using spinpair::Matrix8x4cd;
using spinpair::Vector16cd;

// ---------------------------------------------------------------------------
// Series sine/cosine (long double Taylor sums, no libm trig).

inline long double series_sin(long double x) {
  long double term = x, sum = x;
  for (int k = 1; k < 40; ++k) {
    term *= -x * x / ((2.0L * k) * (2.0L * k + 1.0L));
    sum += term;
  }
  return sum;
}

inline long double series_cos(long double x) {
  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 40; ++k) {
    term *= -x * x / ((2.0L * k - 1.0L) * (2.0L * k));
    sum += term;
  }
  return sum;
}

// Spherical Bessel j0, j2 by their own power series; y0, y2 from the closed
// forms with series trigonometry.
inline double series_j0(double x) {
  const long double lx = x;
  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 40; ++k) {
    term *= -lx * lx / ((2.0L * k) * (2.0L * k + 1.0L));
    sum += term;
  }
  return static_cast<double>(sum);
}

inline double series_j2(double x) {
  const long double lx = x;
  long double term = lx * lx / 15.0L, sum = term;
  long double odd = 5.0L;
  for (int k = 1; k < 40; ++k) {
    odd += 2.0L;
    term *= -lx * lx / (2.0L * k * odd);
    sum += term;
  }
  return static_cast<double>(sum);
}

inline double series_y0(double x) {
  return static_cast<double>(-series_cos(x) / x);
}

inline double series_y2(double x) {
  const long double lx = x;
  return static_cast<double>((-3.0L / (lx * lx * lx) + 1.0L / lx) *
                                 series_cos(lx) -
                             3.0L * series_sin(lx) / (lx * lx));
}

// ---------------------------------------------------------------------------
// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> by the factorial formula.
// Arguments are doubled to stay integral.

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tJ,
                             int tM) {
  if (tm1 + tm2 != tM) return 0.0;
  auto half = [](int twice) { return twice / 2; };
  const int a = half(tj1 + tj2 - tJ);
  const int b = half(tj1 - tj2 + tJ);
  const int c = half(-tj1 + tj2 + tJ);
  const int d = half(tj1 + tj2 + tJ) + 1;
  if (a < 0 || b < 0 || c < 0) return 0.0;
  const double delta =
      factorial(a) * factorial(b) * factorial(c) / factorial(d);
  const double pref = (tJ + 1) * delta * factorial(half(tJ + tM)) *
                      factorial(half(tJ - tM)) * factorial(half(tj1 - tm1)) *
                      factorial(half(tj1 + tm1)) * factorial(half(tj2 - tm2)) *
                      factorial(half(tj2 + tm2));
  double sum = 0.0;
  for (int k = 0;; ++k) {
    const int k1 = a - k;
    const int k2 = half(tj1 - tm1) - k;
    const int k3 = half(tj2 + tm2) - k;
    const int k4 = half(tJ - tj2 + tm1) + k;
    const int k5 = half(tJ - tj1 - tm2) + k;
    if (k1 < 0 || k2 < 0 || k3 < 0) break;
    if (k4 < 0 || k5 < 0) continue;
    const double term = 1.0 / (factorial(k) * factorial(k1) * factorial(k2) *
                               factorial(k3) * factorial(k4) * factorial(k5));
    sum += (k % 2 == 0 ? term : -term);
  }
  return std::sqrt(pref) * sum;
}

// ---------------------------------------------------------------------------
// Operator-algebra construction of the ground-manifold generator.  Single
// atom states ordered (g_down, g_up, e_beta, e_alpha); two-atom states as
// 4*s1 + s2; ground pairs and one-excitation states enumerated explicitly.

using Mat16 = Eigen::Matrix<complexd, 16, 16>;

inline Eigen::Matrix4cd lowering_op(int q) {
  // |g><e| weighted by the branching amplitude, polarization q = m_e - m_g.
  Eigen::Matrix4cd op = Eigen::Matrix4cd::Zero();
  using spinpair::MagneticQN;
  const MagneticQN qns[2] = {MagneticQN::minus_half(), MagneticQN::plus_half()};
  for (int g = 0; g < 2; ++g) {
    for (int e = 0; e < 2; ++e) {
      const int pol = ((e == 1 ? 1 : -1) - (g == 1 ? 1 : -1)) / 2;
      if (pol != q) continue;
      op(g, 2 + e) = spinpair::cg(qns[g], qns[e]);
    }
  }
  return op;
}

inline Mat16 embed1(const Eigen::Matrix4cd& op) {
  Mat16 out = Mat16::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int s = 0; s < 4; ++s) out(4 * i + s, 4 * j + s) = op(i, j);
  return out;
}

inline Mat16 embed2(const Eigen::Matrix4cd& op) {
  Mat16 out = Mat16::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int s = 0; s < 4; ++s) out(4 * s + i, 4 * s + j) = op(i, j);
  return out;
}

struct IndependentBuilder {
  // Enumerations of the full 16-dim two-atom space.
  std::vector<int> ground;   // 4: both atoms in a ground state
  std::vector<int> one_exc;  // 8: atom-1-excited block first

  IndependentBuilder() {
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) ground.push_back(4 * s1 + s2);
    for (int e1 = 0; e1 < 2; ++e1)
      for (int s2 = 0; s2 < 2; ++s2) one_exc.push_back(4 * (2 + e1) + s2);
    for (int s1 = 0; s1 < 2; ++s1)
      for (int e2 = 0; e2 < 2; ++e2) one_exc.push_back(4 * s1 + (2 + e2));
  }

  Matrix16cd build(const spinpair::DriveParams& params,
                   const spinpair::PairGeometry& geom,
                   const spinpair::GeneratorOptions& options) const {
    using spinpair::PropagatorMatrix;
    const PropagatorMatrix Gt =
        options.include_im_shift
            ? spinpair::propagator_matrix(geom.separation)
            : spinpair::propagator_matrix_decay(geom.separation);
    const PropagatorMatrix Gd =
        spinpair::propagator_matrix_decay(geom.separation);

    Eigen::Matrix4cd low[3] = {lowering_op(-1), lowering_op(0),
                               lowering_op(1)};
    Mat16 S1[3], S2[3];
    for (int q = 0; q < 3; ++q) {
      S1[q] = embed1(low[q]);
      S2[q] = embed2(low[q]);
    }

    // Exchange part of the one-excitation evolution.
    Mat16 cross = Mat16::Zero();
    for (int q1 = -1; q1 <= 1; ++q1) {
      for (int q2 = -1; q2 <= 1; ++q2) {
        cross += Gt(q1, q2) * (S1[q1 + 1].adjoint() * S2[q2 + 1]);
        cross += Gt(q2, q1) * (S2[q2 + 1].adjoint() * S1[q1 + 1]);
      }
    }

    Matrix8cd A = Matrix8cd::Identity() * complexd(-params.gamma, -params.delta);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        A(r, c) += -params.gamma * cross(one_exc[r], one_exc[c]);

    // Drive operator restricted to (one-excitation x ground).
    const double phase2 =
        options.zero_drive_phase ? 0.0 : geom.drive_phase();
    Eigen::Matrix4cd raise1 = Eigen::Matrix4cd::Zero();
    raise1(3, 0) = 1.0;  // |alpha><down|
    Mat16 V = params.chi * embed1(raise1) +
              params.chi * std::polar(1.0, phase2) * embed2(raise1);
    Matrix8x4cd B;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 4; ++c)
        B(r, c) = complexd(0.0, 1.0) * V(one_exc[r], ground[c]);

    const Matrix8x4cd M = A.fullPivLu().solve(-B);
    const Eigen::Matrix<complexd, 4, 8> C = -B.adjoint();
    const Eigen::Matrix4cd W = C * M;

    // Emission maps from the one-excitation block to the ground block.
    Eigen::Matrix<complexd, 4, 8> E1[3], E2[3];
    for (int q = 0; q < 3; ++q) {
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 8; ++c) {
          E1[q](r, c) = S1[q](ground[r], one_exc[c]);
          E2[q](r, c) = S2[q](ground[r], one_exc[c]);
        }
    }

    Matrix16cd L = Matrix16cd::Zero();
    for (int gk = 0; gk < 4; ++gk) {
      for (int gb = 0; gb < 4; ++gb) {
        Eigen::Matrix4cd E = Eigen::Matrix4cd::Zero();
        E(gk, gb) = 1.0;
        const Matrix8cd sigma = M.col(gk) * M.col(gb).adjoint();

        Eigen::Matrix4cd dot = W * E + E * W.adjoint();
        for (int q = 0; q < 3; ++q) {
          dot += 2.0 * params.gamma * E1[q] * sigma * E1[q].adjoint();
          dot += 2.0 * params.gamma * E2[q] * sigma * E2[q].adjoint();
        }
        Eigen::Matrix4cd t3 = Eigen::Matrix4cd::Zero();
        Eigen::Matrix4cd t3h = Eigen::Matrix4cd::Zero();
        for (int q1 = -1; q1 <= 1; ++q1) {
          for (int q2 = -1; q2 <= 1; ++q2) {
            t3 += 2.0 * params.gamma * Gd(q2, q1) *
                  (E1[q1 + 1] * sigma * E2[q2 + 1].adjoint());
            t3h += 2.0 * params.gamma * Gd(q2, q1) *
                   (E1[q1 + 1] * sigma.adjoint() * E2[q2 + 1].adjoint());
          }
        }
        dot += t3 + t3h.adjoint();

        for (int k = 0; k < 4; ++k)
          for (int b = 0; b < 4; ++b) L(4 * k + b, 4 * gk + gb) = dot(k, b);
      }
    }

    if (!options.include_stark) {
      const double S = params.chi * params.chi * params.delta /
                       (params.gamma * params.gamma +
                        params.delta * params.delta);
      auto n_down = [](int g) { return (g / 2 == 0) + (g % 2 == 0); };
      for (int k = 0; k < 4; ++k)
        for (int b = 0; b < 4; ++b)
          L(4 * k + b, 4 * k + b) -=
              complexd(0.0, 1.0) * S *
              static_cast<double>(n_down(k) - n_down(b));
    }
    return L;
  }
};

// ---------------------------------------------------------------------------
// Fixed-step RK4 for rho_dot = (L / gamma_op) rho in gamma_op time units.

inline Matrix4cd rk4_propagate(const spinpair::Generator& gen,
                               const Matrix4cd& rho0, double t,
                               int steps = 20000) {
  const Matrix16cd Lt = gen.matrix() / gen.gamma_op();
  Vector16cd v = spinpair::vec_density(rho0);
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const Vector16cd k1 = Lt * v;
    const Vector16cd k2 = Lt * (v + 0.5 * h * k1);
    const Vector16cd k3 = Lt * (v + 0.5 * h * k2);
    const Vector16cd k4 = Lt * (v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return spinpair::unvec_density(v);
}

// ---------------------------------------------------------------------------
// Symmetric (coupled) basis helpers.  Columns: g1=|uu>, g0, g-1=|dd|, and the
// antisymmetric singlet.

inline Matrix4cd coupled_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix4cd U = Matrix4cd::Zero();
  U(3, 0) = 1.0;
  U(2, 1) = s;
  U(1, 1) = s;
  U(0, 2) = 1.0;
  U(2, 3) = s;
  U(1, 3) = -s;
  return U;
}

// Coefficient of rho_{coupled kl} in d/dt rho_{coupled ij} under L.
inline complexd coupled_coefficient(const spinpair::Generator& gen, int i,
                                    int j, int k, int l) {
  const Matrix4cd U = coupled_basis();
  Matrix4cd E = Matrix4cd::Zero();
  E(k, l) = 1.0;
  const Matrix4cd source = U * E * U.adjoint();
  const Matrix4cd dot = U.adjoint() * gen.apply(source) * U;
  return dot(i, j) / gen.gamma_op();
}

// ---------------------------------------------------------------------------
// Random density matrices (Hermitian, positive, unit trace).

inline Matrix4cd random_density(std::mt19937& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix4cd X;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) X(i, j) = complexd(normal(rng), normal(rng));
  Matrix4cd rho = X * X.adjoint();
  rho /= rho.trace();
  return rho;
}

inline Matrix4cd random_matrix(std::mt19937& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix4cd X;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) X(i, j) = complexd(normal(rng), normal(rng));
  return X;
}

// Default drive regime used across the tests.
inline spinpair::DriveParams make_params(double gamma_over_delta = 1e-3,
                                         double chi_over_delta = 0.1) {
  const double gamma = 1.0;
  const double delta = gamma / gamma_over_delta;
  return spinpair::DriveParams(chi_over_delta * delta, delta, gamma, 1.0);
}

}  // namespace oracle
