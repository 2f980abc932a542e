#include "spinpair/engine.hpp"

#include <cmath>
#include <ostream>

#include "spinpair/angular.hpp"

namespace spinpair {

namespace {

constexpr complexd kI(0.0, 1.0);

// Single-atom sublevels: ground 0 = down, 1 = up; excited 0 = beta,
// 1 = alpha.  Both pairs carry m = -1/2, +1/2 in that order.
int twice_m(int s) { return s == 0 ? -1 : +1; }

MagneticQN qn(int s) {
  return s == 0 ? MagneticQN::minus_half() : MagneticQN::plus_half();
}

// Photon polarization of the |ground g> <-> |excited e> transition.
int pol(int g, int e) { return (twice_m(e) - twice_m(g)) / 2; }

double cg_ge(int g, int e) { return cg(qn(g), qn(e)); }

int gidx(int a1, int a2) { return 2 * a1 + a2; }
int e1idx(int exc1, int g2) { return 2 * exc1 + g2; }
int e2idx(int g1, int exc2) { return 4 + 2 * g1 + exc2; }

int n_down(int g) { return (g / 2 == 0 ? 1 : 0) + (g % 2 == 0 ? 1 : 0); }

constexpr int kDown = 0;
constexpr int kAlpha = 1;

Matrix4x8cd drive_collection_map(const DriveParams& params,
                                 const PairGeometry& geom,
                                 const GeneratorOptions& options) {
  // Ground depletion couples each ground amplitude with a down slot to the
  // corresponding alpha amplitude, with the conjugate laser phase.
  const double phase2 = options.zero_drive_phase ? 0.0 : geom.drive_phase();
  Matrix4x8cd C = Matrix4x8cd::Zero();
  const complexd ichi = kI * params.chi;
  for (int nu = 0; nu < 2; ++nu) {
    C(gidx(kDown, nu), e1idx(kAlpha, nu)) = ichi;
  }
  for (int mu = 0; mu < 2; ++mu) {
    C(gidx(mu, kDown), e2idx(mu, kAlpha)) = ichi * std::polar(1.0, -phase2);
  }
  return C;
}

}  // namespace

DriveParams::DriveParams(double chi_, double delta_, double gamma_, double k_L_)
    : chi(chi_), delta(delta_), gamma(gamma_), k_L(k_L_) {
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("DriveParams: gamma must be > 0");
  }
  if (!(k_L > 0.0)) {
    throw std::invalid_argument("DriveParams: k_L must be > 0");
  }
  if (delta == 0.0) {
    throw std::invalid_argument("DriveParams: delta must be nonzero");
  }
}

PairGeometry::PairGeometry(double x, double theta, double phi)
    : separation(x > 0.0 ? x : throw std::domain_error(
                                    "PairGeometry: x = k_L*R21 must be > 0; "
                                    "the coincident-atom regime is covered by "
                                    "the small-R analytic solutions (use x = "
                                    "1e-4)"),
                 theta, phi) {}

PairGeometry PairGeometry::perpendicular(double x) {
  return PairGeometry(x, 1.57079632679489661923, 0.0);
}

GroundDensity GroundDensity::from_matrix(const Matrix4cd& rho) {
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10) {
    throw std::invalid_argument("GroundDensity: matrix is not Hermitian");
  }
  const double trace_defect = std::abs(rho.trace() - complexd(1.0, 0.0));
  if (trace_defect > 1e-10) {
    throw std::invalid_argument("GroundDensity: trace must be 1");
  }
  for (int k = 0; k < 4; ++k) {
    const complexd d = rho(k, k);
    if (d.real() < -1e-10 || d.real() > 1.0 + 1e-10) {
      throw std::invalid_argument(
          "GroundDensity: diagonal entries must lie in [0, 1]");
    }
  }
  return GroundDensity(rho);
}

GroundDensity GroundDensity::product(double a1, double b1, double a2,
                                     double b2) {
  if (std::abs(a1 * a1 + b1 * b1 - 1.0) > 1e-12 ||
      std::abs(a2 * a2 + b2 * b2 - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "GroundDensity::product: single-atom amplitudes must be normalized");
  }
  Eigen::Vector2d psi1(a1, b1), psi2(a2, b2);
  const Eigen::Matrix2d r1 = psi1 * psi1.transpose();
  const Eigen::Matrix2d r2 = psi2 * psi2.transpose();
  Matrix4cd rho;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2)
          rho(gidx(i1, i2), gidx(j1, j2)) = r1(i1, j1) * r2(i2, j2);
  return GroundDensity(rho);
}

GroundDensity GroundDensity::both_down() { return product(1.0, 0.0, 1.0, 0.0); }

GroundDensity GroundDensity::both_balanced() {
  const double s = 1.0 / std::sqrt(2.0);
  return product(s, s, s, s);
}

AmplitudeSystem build_amplitude_system(const DriveParams& params,
                                       const PairGeometry& geom,
                                       const GeneratorOptions& options) {
  const PropagatorMatrix G = options.include_im_shift
                                 ? propagator_matrix(geom.separation)
                                 : propagator_matrix_decay(geom.separation);

  AmplitudeSystem sys;
  sys.A = Matrix8cd::Identity() * complexd(-params.gamma, -params.delta);

  // Exchange blocks.  An excitation on one atom is transferred to the other:
  // atom 1 absorbs (mu -> mu') while atom 2 emits (nu' -> nu), weighted by
  // the propagator indexed with the two polarizations.  The reverse block
  // carries the transposed propagator indices, which makes the decay part of
  // the coupling Hermitian and the shift part anti-Hermitian across blocks.
  for (int mu = 0; mu < 2; ++mu) {
    for (int mu_p = 0; mu_p < 2; ++mu_p) {
      for (int nu = 0; nu < 2; ++nu) {
        for (int nu_p = 0; nu_p < 2; ++nu_p) {
          const int q1 = pol(mu, mu_p);
          const int q2 = pol(nu, nu_p);
          const double w = cg_ge(mu, mu_p) * cg_ge(nu, nu_p);
          sys.A(e1idx(mu_p, nu), e2idx(mu, nu_p)) +=
              -params.gamma * G(q1, q2) * w;
          sys.A(e2idx(mu, nu_p), e1idx(mu_p, nu)) +=
              -params.gamma * G(q2, q1) * w;
        }
      }
    }
  }

  // Drive: only the down sublevel couples to the sigma+ field, exciting the
  // alpha state.  Atom 1 sits at the origin; atom 2 carries the laser phase.
  const double phase2 = options.zero_drive_phase ? 0.0 : geom.drive_phase();
  sys.B = Matrix8x4cd::Zero();
  const complexd ichi = kI * params.chi;
  for (int nu = 0; nu < 2; ++nu) {
    sys.B(e1idx(kAlpha, nu), gidx(kDown, nu)) = ichi;
  }
  for (int mu = 0; mu < 2; ++mu) {
    sys.B(e2idx(mu, kAlpha), gidx(mu, kDown)) = ichi * std::polar(1.0, phase2);
  }
  return sys;
}

ExcitedEliminationMap quasistatic_eliminate(const Matrix8cd& A,
                                            const Matrix8x4cd& B) {
  Eigen::JacobiSVD<Matrix8cd> svd(A);
  const auto& sv = svd.singularValues();
  const double cond =
      sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                              : std::numeric_limits<double>::infinity();
  if (!(cond <= 1e12)) {
    throw NumericError(
        "quasistatic_eliminate: amplitude matrix is ill-conditioned "
        "(condition number " +
        std::to_string(cond) + " > 1e12)");
  }
  const Matrix8x4cd map = A.colPivHouseholderQr().solve(-B);
  const double bnorm = B.norm();
  const double residual =
      bnorm > 0.0 ? (A * map + B).norm() / bnorm : (A * map + B).norm();
  return ExcitedEliminationMap(map, residual, cond);
}

Matrix16cd out_terms(const ExcitedEliminationMap& map,
                     const DriveParams& params, const PairGeometry& geom,
                     const GeneratorOptions& options) {
  // rho_dot_out = W rho + rho W^dag with W the ground-depletion map composed
  // with the elimination map.
  const Matrix4cd W =
      drive_collection_map(params, geom, options) * map.matrix();
  Matrix16cd L = Matrix16cd::Zero();
  for (int k = 0; k < 4; ++k) {
    for (int b = 0; b < 4; ++b) {
      for (int kp = 0; kp < 4; ++kp) {
        L(4 * k + b, 4 * kp + b) += W(k, kp);
      }
      for (int bp = 0; bp < 4; ++bp) {
        L(4 * k + b, 4 * k + bp) += std::conj(W(b, bp));
      }
    }
  }
  return L;
}

namespace {

// Repopulation channel applied to a one-excitation bilinear sigma.  The
// cross term pairs a decay of the ket-side atom 1 with a decay of the
// bra-side atom 2 and is weighted by the decay propagator; its mirror is the
// Hermiticity completion.
Matrix4cd apply_repopulation(const Matrix8cd& sigma, double gamma,
                             const PropagatorMatrix& Gd) {
  Matrix4cd out = Matrix4cd::Zero();

  auto cross = [&](const Matrix8cd& s) {
    Matrix4cd r = Matrix4cd::Zero();
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n)
        for (int mu = 0; mu < 2; ++mu)
          for (int nu = 0; nu < 2; ++nu)
            for (int m_p = 0; m_p < 2; ++m_p)
              for (int nu_p = 0; nu_p < 2; ++nu_p)
                r(gidx(m, n), gidx(mu, nu)) +=
                    2.0 * gamma * Gd(pol(nu, nu_p), pol(m, m_p)) *
                    cg_ge(m, m_p) * cg_ge(nu, nu_p) *
                    s(e1idx(m_p, n), e2idx(mu, nu_p));
    return r;
  };

  // Single-atom branching, atom 1 on both sides.
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu)
          for (int m_p = 0; m_p < 2; ++m_p)
            for (int mu_p = 0; mu_p < 2; ++mu_p) {
              if (pol(m, m_p) != pol(mu, mu_p)) continue;
              out(gidx(m, n), gidx(mu, nu)) +=
                  2.0 * gamma * cg_ge(m, m_p) * cg_ge(mu, mu_p) *
                  sigma(e1idx(m_p, n), e1idx(mu_p, nu));
            }
  // Atom 2 on both sides.
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n)
      for (int mu = 0; mu < 2; ++mu)
        for (int nu = 0; nu < 2; ++nu)
          for (int n_p = 0; n_p < 2; ++n_p)
            for (int nu_p = 0; nu_p < 2; ++nu_p) {
              if (pol(n, n_p) != pol(nu, nu_p)) continue;
              out(gidx(m, n), gidx(mu, nu)) +=
                  2.0 * gamma * cg_ge(n, n_p) * cg_ge(nu, nu_p) *
                  sigma(e2idx(m, n_p), e2idx(mu, nu_p));
            }

  out += cross(sigma);
  out += cross(sigma.adjoint().eval()).adjoint();
  return out;
}

}  // namespace

Matrix16cd in_terms(const ExcitedEliminationMap& map, const DriveParams& params,
                    const PairGeometry& geom) {
  const PropagatorMatrix Gd = propagator_matrix_decay(geom.separation);
  const Matrix8x4cd& M = map.matrix();
  Matrix16cd L = Matrix16cd::Zero();
  for (int gk = 0; gk < 4; ++gk) {
    for (int gb = 0; gb < 4; ++gb) {
      const Matrix8cd sigma = M.col(gk) * M.col(gb).adjoint();
      const Matrix4cd out = apply_repopulation(sigma, params.gamma, Gd);
      const int col = 4 * gk + gb;
      for (int k = 0; k < 4; ++k)
        for (int b = 0; b < 4; ++b) L(4 * k + b, col) = out(k, b);
    }
  }
  return L;
}

Generator::Generator(const Matrix16cd& matrix, double gamma_op,
                     const GeneratorOptions& options)
    : L_(matrix), gamma_op_(gamma_op), options_(options) {}

Matrix4cd Generator::apply(const Matrix4cd& rho) const {
  return unvec_density(L_ * vec_density(rho));
}

void Generator::dump(std::ostream& os) const {
  char buf[64];
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) {
      const complexd v = L_(r, c) / gamma_op_;
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v.real(), v.imag());
      os << buf << (c + 1 < 16 ? " " : "");
    }
    os << "\n";
  }
}

Generator assemble_generator(const DriveParams& params,
                             const PairGeometry& geom,
                             const GeneratorOptions& options) {
  const AmplitudeSystem sys = build_amplitude_system(params, geom, options);
  const ExcitedEliminationMap map = quasistatic_eliminate(sys.A, sys.B);
  Matrix16cd L = out_terms(map, params, geom, options) +
                 in_terms(map, params, geom);
  if (!options.include_stark) {
    // Remove the uniform light shift of the driven sublevel: each ground
    // element rotates at S * (down count difference between ket and bra).
    const double S = params.chi * params.chi * params.delta /
                     (params.gamma * params.gamma + params.delta * params.delta);
    for (int k = 0; k < 4; ++k) {
      for (int b = 0; b < 4; ++b) {
        L(4 * k + b, 4 * k + b) -= kI * S * (n_down(k) - n_down(b));
      }
    }
  }
  return Generator(L, params.gamma_op(), options);
}

complexd coherence_expectation(const Matrix4cd& rho) {
  // Sum over atoms of the ground coherence |down><up| in the pair basis.
  return rho(3, 1) + rho(2, 0) + rho(3, 2) + rho(1, 0);
}

double population_expectation(const Matrix4cd& rho) {
  return 0.5 * (2.0 * rho(3, 3).real() + rho(2, 2).real() + rho(1, 1).real());
}

complexd one_atom_coherence(const Matrix4cd& rho) {
  return rho(3, 1) + rho(2, 0);
}

Vector16cd vec_density(const Matrix4cd& rho) {
  Vector16cd v;
  for (int k = 0; k < 4; ++k)
    for (int b = 0; b < 4; ++b) v(4 * k + b) = rho(k, b);
  return v;
}

Matrix4cd unvec_density(const Vector16cd& v) {
  Matrix4cd rho;
  for (int k = 0; k < 4; ++k)
    for (int b = 0; b < 4; ++b) rho(k, b) = v(4 * k + b);
  return rho;
}

}  // namespace spinpair
