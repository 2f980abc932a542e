#include "spinpair/integrator.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace spinpair {

namespace {
// Above this eigenvector condition number the generator is treated as
// effectively defective and propagation falls back to scaling-and-squaring.
constexpr double kEigenConditionLimit = 1e8;
}  // namespace

struct Trajectory::Propagation {
  Matrix16cd L;          // physical units
  double gamma_op;
  bool spectral;
  Matrix16cd V;
  Matrix16cd Vinv;
  Vector16cd eigenvalues;

  explicit Propagation(const Generator& gen)
      : L(gen.matrix()), gamma_op(gen.gamma_op()) {
    Eigen::ComplexEigenSolver<Matrix16cd> ces(L);
    V = ces.eigenvectors();
    eigenvalues = ces.eigenvalues();
    Eigen::JacobiSVD<Matrix16cd> svd(V);
    const auto& sv = svd.singularValues();
    const double cond = sv(sv.size() - 1) > 0.0
                            ? sv(0) / sv(sv.size() - 1)
                            : std::numeric_limits<double>::infinity();
    spectral = cond < kEigenConditionLimit;
    if (spectral) Vinv = V.inverse();
  }

  // exp(L t) v for t in 1/gamma_op units.
  Vector16cd advance(const Vector16cd& v, double t) const {
    const double t_phys = t / gamma_op;
    if (spectral) {
      Vector16cd y = Vinv * v;
      for (int i = 0; i < 16; ++i) {
        y(i) *= std::exp(eigenvalues(i) * t_phys);
      }
      return V * y;
    }
    const Matrix16cd expm = (L * t_phys).exp();
    return expm * v;
  }
};

Trajectory::Trajectory(const Generator& gen, const Matrix4cd& rho0,
                       std::vector<double> times)
    : gen_(gen), rho0_(rho0), times_(std::move(times)) {}

Matrix4cd Trajectory::state_at(double t) const {
  if (times_.empty() || t < times_.front() - 1e-12 ||
      t > times_.back() + 1e-12) {
    throw std::invalid_argument("Trajectory::state_at: t outside span");
  }
  return unvec_density(prop_->advance(vec_density(rho0_), t));
}

Trajectory propagate(const Generator& gen, const GroundDensity& rho0,
                     const std::vector<double>& times) {
  if (!std::is_sorted(times.begin(), times.end())) {
    throw std::invalid_argument("propagate: times must be sorted");
  }
  if (!times.empty() && times.front() < 0.0) {
    throw std::invalid_argument("propagate: times must be nonnegative");
  }

  Trajectory traj(gen, rho0.matrix(), times);
  traj.prop_ = std::make_shared<const Trajectory::Propagation>(gen);
  traj.states_.reserve(times.size());
  traj.samples_.reserve(times.size());

  const Vector16cd v0 = vec_density(rho0.matrix());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const Vector16cd v = traj.prop_->advance(v0, times[k]);
    if (!v.allFinite()) {
      throw NumericError("propagate: nonfinite state at time index " +
                         std::to_string(k));
    }
    const Matrix4cd rho = unvec_density(v);
    const double trace_defect = std::abs(rho.trace() - complexd(1.0, 0.0));
    const double herm_defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    double diag_min = 0.0;
    for (int i = 0; i < 4; ++i) diag_min = std::min(diag_min, rho(i, i).real());
    if (trace_defect > 1e-8 || herm_defect > 1e-8 || diag_min < -1e-8) {
      throw NumericError("propagate: state left physical tolerances at index " +
                         std::to_string(k));
    }
    traj.states_.push_back(rho);
    traj.samples_.push_back(Sample{times[k], coherence_expectation(rho),
                                   population_expectation(rho),
                                   one_atom_coherence(rho)});
  }
  return traj;
}

double observable_value(Observable obs, const Matrix4cd& rho) {
  switch (obs) {
    case Observable::coherence:
      return coherence_expectation(rho).real();
    case Observable::population:
      return population_expectation(rho);
    case Observable::one_atom_coherence:
      return one_atom_coherence(rho).real();
  }
  return 0.0;
}

double instantaneous_rate(const Trajectory& traj, Observable obs, double t) {
  const Matrix4cd rho = traj.state_at(t);
  const double value = observable_value(obs, rho);
  if (std::abs(value) <= 1e-9) {
    throw NumericError("instantaneous_rate: rate undefined near zero crossing");
  }
  // d(obs)/d(gamma_op t) from the generator action.
  const Matrix4cd rho_dot = traj.gen_.apply(rho);
  const double deriv = observable_value(obs, rho_dot) / traj.gen_.gamma_op();
  return -deriv / value;
}

}  // namespace spinpair
