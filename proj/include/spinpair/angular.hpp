#pragma once

// Angular-momentum weights for a J=1/2 -> J'=1/2 transition: the four
// Clebsch-Gordan coefficients that weight every vacuum coupling, and the
// repopulation tensor for spontaneous decay back into the ground manifold.

#include <array>
#include <cmath>

namespace spinpair {

// Magnetic quantum number of a sublevel.  Only m = -1/2 and m = +1/2 are
// constructible; stored as 2m to keep arithmetic exact.
class MagneticQN {
 public:
  static constexpr MagneticQN minus_half() { return MagneticQN(-1); }
  static constexpr MagneticQN plus_half() { return MagneticQN(+1); }

  constexpr int twice() const { return twice_m_; }
  constexpr double value() const { return 0.5 * twice_m_; }

  friend constexpr bool operator==(MagneticQN a, MagneticQN b) {
    return a.twice_m_ == b.twice_m_;
  }
  friend constexpr bool operator!=(MagneticQN a, MagneticQN b) {
    return !(a == b);
  }

 private:
  constexpr explicit MagneticQN(int twice_m) : twice_m_(twice_m) {}
  int twice_m_;
};

// A coefficient kept as sign * sqrt(num/den) so that generator entries stay
// exact rational multiples of gamma_op until the final conversion to double.
struct RootRational {
  int sign;  // -1, 0, +1
  int num;   // nonnegative
  int den;   // positive

  double value() const {
    return num == 0 ? 0.0 : sign * std::sqrt(static_cast<double>(num) / den);
  }
};

// The four coefficients {m, m'} indexed by (ground m, excited m').
// Magnitudes are the square roots of the branching fractions
// (2/3 for the sigma transitions, 1/3 for the pi transitions); the sign
// convention is the all-positive one obtained from the Condon-Shortley
// spin-pair coefficients <1/2 m; 1/2 -m' | 1, m-m'> scaled by sqrt(2/3),
// which is the convention that reproduces the small-separation coupled-basis
// equations (cross coupling -gamma/3 between the one-excitation symmetric
// states).
class CGTable {
 public:
  static const CGTable& instance();

  RootRational exact(MagneticQN ground, MagneticQN excited) const;
  double coeff(MagneticQN ground, MagneticQN excited) const;

 private:
  CGTable();
  std::array<RootRational, 4> table_;
};

// Signed Clebsch-Gordan weight for the transition |ground m> <-> |excited m'>.
double cg(MagneticQN m, MagneticQN m_prime);

// Repopulation tensor: rate at which spontaneous decay from the excited pair
// (a', b') feeds the ground pair (a, b).  Vanishes unless both decays carry
// the same photon polarization.  Requires gamma > 0.
double gamma_repop(MagneticQN a, MagneticQN a_prime, MagneticQN b,
                   MagneticQN b_prime, double gamma);

}  // namespace spinpair
