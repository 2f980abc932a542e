#pragma once

// Exact propagation of rho_dot = L rho for a constant generator, sampled on
// an arbitrary time grid, plus instantaneous observable rates evaluated by
// direct generator action (no finite differences).

#include <memory>
#include <vector>

#include "spinpair/engine.hpp"

namespace spinpair {

enum class Observable { coherence, population, one_atom_coherence };

struct Sample {
  double t;  // in units of 1/gamma_op
  complexd coherence;
  double population;
  complexd one_atom;
};

// Time series of ground-manifold states with derived observables.  Times are
// expressed in units of 1/gamma_op.  Each state is computed as the exact
// matrix-exponential action exp(L t) rho0, via eigendecomposition when the
// eigenvector basis is well conditioned and scaling-and-squaring otherwise.
class Trajectory {
 public:
  const std::vector<double>& times() const { return times_; }
  const std::vector<Matrix4cd>& states() const { return states_; }
  const std::vector<Sample>& samples() const { return samples_; }
  const Generator& generator() const { return gen_; }

  // State at an arbitrary time within the trajectory span, recomputed
  // exactly (not interpolated).
  Matrix4cd state_at(double t) const;

 private:
  friend Trajectory propagate(const Generator&, const GroundDensity&,
                              const std::vector<double>&);
  friend double instantaneous_rate(const Trajectory&, Observable, double);

  struct Propagation;  // spectral cache

  Trajectory(const Generator& gen, const Matrix4cd& rho0,
             std::vector<double> times);

  Generator gen_;
  Matrix4cd rho0_;
  std::vector<double> times_;
  std::vector<Matrix4cd> states_;
  std::vector<Sample> samples_;
  std::shared_ptr<const Propagation> prop_;
};

// Propagates rho0 over the sorted, nonnegative time grid (1/gamma_op units).
// Throws NumericError if a propagated state turns nonfinite or leaves the
// physical tolerance band (trace, Hermiticity, diagonal positivity at 1e-8).
Trajectory propagate(const Generator& gen, const GroundDensity& rho0,
                     const std::vector<double>& times);

// Instantaneous decay rate -(d/dt obs)/obs in units of gamma_op, with the
// derivative obtained from L rho(t).  Throws NumericError when |obs| <= 1e-9
// (rate undefined near a zero crossing).
double instantaneous_rate(const Trajectory& traj, Observable obs, double t);

double observable_value(Observable obs, const Matrix4cd& rho);

}  // namespace spinpair
