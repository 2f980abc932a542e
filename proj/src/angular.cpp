#include "spinpair/angular.hpp"

namespace spinpair {

namespace {

// Index 2*(ground is up) + (excited is alpha).
int pack(MagneticQN ground, MagneticQN excited) {
  return 2 * (ground.twice() > 0 ? 1 : 0) + (excited.twice() > 0 ? 1 : 0);
}

}  // namespace

CGTable::CGTable() {
  // (down, beta) -> sqrt(1/3), (down, alpha) -> sqrt(2/3)
  // (up,   beta) -> sqrt(2/3), (up,   alpha) -> sqrt(1/3)
  table_[0] = RootRational{+1, 1, 3};
  table_[1] = RootRational{+1, 2, 3};
  table_[2] = RootRational{+1, 2, 3};
  table_[3] = RootRational{+1, 1, 3};
}

const CGTable& CGTable::instance() {
  static const CGTable table;
  return table;
}

RootRational CGTable::exact(MagneticQN ground, MagneticQN excited) const {
  return table_[pack(ground, excited)];
}

double CGTable::coeff(MagneticQN ground, MagneticQN excited) const {
  return table_[pack(ground, excited)].value();
}

double cg(MagneticQN m, MagneticQN m_prime) {
  return CGTable::instance().coeff(m, m_prime);
}

double gamma_repop(MagneticQN a, MagneticQN a_prime, MagneticQN b,
                   MagneticQN b_prime, double gamma) {
  // Photon polarization carried by each decay, as 2*q.
  const int qa = a_prime.twice() - a.twice();
  const int qb = b_prime.twice() - b.twice();
  if (qa != qb) return 0.0;
  return 2.0 * gamma * cg(a, a_prime) * cg(b, b_prime);
}

}  // namespace spinpair
