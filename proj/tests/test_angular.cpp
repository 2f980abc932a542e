#include <doctest.h>

#include "helpers.hpp"
#include "spinpair/angular.hpp"

using spinpair::cg;
using spinpair::CGTable;
using spinpair::gamma_repop;
using spinpair::MagneticQN;

namespace {
const MagneticQN kDown = MagneticQN::minus_half();
const MagneticQN kUp = MagneticQN::plus_half();
const MagneticQN kBeta = MagneticQN::minus_half();
const MagneticQN kAlpha = MagneticQN::plus_half();
}  // namespace

TEST_CASE("branching fractions of the four transitions") {
  CHECK(cg(kDown, kAlpha) * cg(kDown, kAlpha) == doctest::Approx(2.0 / 3.0));
  CHECK(cg(kUp, kBeta) * cg(kUp, kBeta) == doctest::Approx(2.0 / 3.0));
  CHECK(cg(kUp, kAlpha) * cg(kUp, kAlpha) == doctest::Approx(1.0 / 3.0));
  CHECK(cg(kDown, kBeta) * cg(kDown, kBeta) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("branching normalization per excited sublevel") {
  for (MagneticQN excited : {kBeta, kAlpha}) {
    double sum = 0.0;
    for (MagneticQN ground : {kDown, kUp}) {
      sum += cg(ground, excited) * cg(ground, excited);
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("signs match the spin-pair Clebsch-Gordan coefficients") {
  // The table equals sqrt(2/3) * <1/2 m; 1/2 -m' | 1, m-m'> evaluated by the
  // factorial formula; all four coefficients come out positive.
  const double scale = std::sqrt(2.0 / 3.0);
  for (MagneticQN ground : {kDown, kUp}) {
    for (MagneticQN excited : {kBeta, kAlpha}) {
      const double ref = scale * oracle::clebsch_gordan(
                                     1, ground.twice(), 1, -excited.twice(), 2,
                                     ground.twice() - excited.twice());
      CHECK(cg(ground, excited) == doctest::Approx(ref).epsilon(1e-14));
      CHECK(cg(ground, excited) > 0.0);
    }
  }
}

TEST_CASE("exact rational storage") {
  const auto sigma = CGTable::instance().exact(kDown, kAlpha);
  CHECK(sigma.num == 2);
  CHECK(sigma.den == 3);
  CHECK(sigma.sign == 1);
  const auto pi = CGTable::instance().exact(kUp, kAlpha);
  CHECK(pi.num == 1);
  CHECK(pi.den == 3);
}

TEST_CASE("repopulation tensor values") {
  const double gamma = 0.7;
  // up <-> alpha on both sides: 2 gamma * 1/3.
  CHECK(gamma_repop(kUp, kAlpha, kUp, kAlpha, gamma) ==
        doctest::Approx(2.0 * gamma / 3.0));
  // down <-> alpha on both sides: 2 gamma * 2/3.
  CHECK(gamma_repop(kDown, kAlpha, kDown, kAlpha, gamma) ==
        doctest::Approx(4.0 * gamma / 3.0));
  // Mismatched photon polarizations select zero.
  CHECK(gamma_repop(kDown, kAlpha, kUp, kAlpha, gamma) == 0.0);
  CHECK(gamma_repop(kUp, kBeta, kDown, kBeta, gamma) == 0.0);
}

TEST_CASE("repopulation tensor symmetry and positivity") {
  const double gamma = 1.3;
  for (MagneticQN a : {kDown, kUp}) {
    for (MagneticQN ap : {kBeta, kAlpha}) {
      for (MagneticQN b : {kDown, kUp}) {
        for (MagneticQN bp : {kBeta, kAlpha}) {
          CHECK(gamma_repop(a, ap, b, bp, gamma) ==
                gamma_repop(b, bp, a, ap, gamma));
        }
      }
      CHECK(gamma_repop(a, ap, a, ap, gamma) >= 0.0);
    }
  }
}
