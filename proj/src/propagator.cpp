#include "spinpair/propagator.hpp"

#include <cmath>

namespace spinpair {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Below this the closed form of j2 loses ~9 digits to cancellation.
constexpr double kSeriesCrossover = 1e-2;

void require_positive(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error(
        "propagator: x = k0*R must be > 0 (singular at zero separation)");
  }
}

}  // namespace

SphericalPoint::SphericalPoint(double x_, double theta_, double phi_)
    : x(x_), theta(theta_), phi(phi_) {
  require_positive(x);
}

complexd spherical_hankel_h0(double x) {
  require_positive(x);
  return complexd(std::sin(x) / x, -std::cos(x) / x);
}

double spherical_bessel_j2(double x) {
  require_positive(x);
  if (x < kSeriesCrossover) {
    // j2 = x^2/15 * sum_k (-x^2/2)^k / (k! * (7*9*...*(2k+5)))
    const double x2 = x * x;
    double term = x2 / 15.0;
    double sum = term;
    double odd = 5.0;
    for (int k = 1; k <= 6; ++k) {
      odd += 2.0;
      term *= -x2 / (2.0 * k * odd);
      sum += term;
    }
    return sum;
  }
  const double s = std::sin(x), c = std::cos(x);
  return (3.0 / (x * x * x) - 1.0 / x) * s - 3.0 * c / (x * x);
}

complexd spherical_hankel_h2(double x) {
  require_positive(x);
  const double s = std::sin(x), c = std::cos(x);
  const double y2 = (-3.0 / (x * x * x) + 1.0 / x) * c - 3.0 * s / (x * x);
  return complexd(spherical_bessel_j2(x), y2);
}

complexd spherical_harmonic(int l, int m, double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  if (l == 0 && m == 0) return complexd(1.0 / std::sqrt(4.0 * kPi), 0.0);
  if (l == 2) {
    switch (m) {
      case 0:
        return complexd(0.25 * std::sqrt(5.0 / kPi) * (3.0 * ct * ct - 1.0),
                        0.0);
      case 1:
        return -0.5 * std::sqrt(15.0 / (2.0 * kPi)) * st * ct *
               std::polar(1.0, phi);
      case -1:
        return 0.5 * std::sqrt(15.0 / (2.0 * kPi)) * st * ct *
               std::polar(1.0, -phi);
      case 2:
        return 0.25 * std::sqrt(15.0 / (2.0 * kPi)) * st * st *
               std::polar(1.0, 2.0 * phi);
      case -2:
        return 0.25 * std::sqrt(15.0 / (2.0 * kPi)) * st * st *
               std::polar(1.0, -2.0 * phi);
      default:
        break;
    }
  }
  throw std::invalid_argument("spherical_harmonic: unsupported (l, m) pair");
}

PropagatorMatrix PropagatorMatrix::from_radial(complexd h0, complexd h2,
                                               const SphericalPoint& point) {
  const double th = point.theta, ph = point.phi;
  const complexd y00 = spherical_harmonic(0, 0, th, ph);
  const complexd y20 = spherical_harmonic(2, 0, th, ph);
  const complexd y2p1 = spherical_harmonic(2, 1, th, ph);
  const complexd y2m1 = spherical_harmonic(2, -1, th, ph);
  const complexd y2p2 = spherical_harmonic(2, 2, th, ph);
  const complexd y2m2 = spherical_harmonic(2, -2, th, ph);

  const double c0 = std::sqrt(4.0 * kPi);
  const double c20 = std::sqrt(4.0 * kPi / 5.0);
  const double c22 = 1.5 * std::sqrt(8.0 * kPi / 15.0);
  const double c21 = 1.5 * std::sqrt(4.0 * kPi / 15.0);

  const complexd g11 = c0 * h0 * y00 - 0.5 * c20 * h2 * y20;
  const complexd g00 = c0 * h0 * y00 + c20 * h2 * y20;
  const complexd g1m1 = -c22 * h2 * y2m2;
  const complexd gm11 = -c22 * h2 * y2p2;
  const complexd g10 = -c21 * h2 * y2m1;
  const complexd gm10 = -c21 * h2 * y2p1;

  PropagatorMatrix g;
  auto set = [&g](int q, int qp, complexd v) {
    g.g_[3 * (q + 1) + (qp + 1)] = v;
  };
  set(1, 1, g11);
  set(0, 0, g00);
  set(1, -1, g1m1);
  set(-1, 1, gm11);
  set(1, 0, g10);
  set(-1, 0, gm10);
  // Remaining entries are fixed by the symmetry relations.
  set(-1, -1, g11);
  set(0, -1, -g10);
  set(0, 1, -gm10);
  return g;
}

double PropagatorMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : g_) m = std::max(m, std::abs(v));
  return m;
}

PropagatorMatrix propagator_matrix(const SphericalPoint& point) {
  return PropagatorMatrix::from_radial(spherical_hankel_h0(point.x),
                                       spherical_hankel_h2(point.x), point);
}

PropagatorMatrix propagator_matrix_decay(const SphericalPoint& point) {
  const complexd j0(std::sin(point.x) / point.x, 0.0);
  const complexd j2(spherical_bessel_j2(point.x), 0.0);
  return PropagatorMatrix::from_radial(j0, j2, point);
}

complexd propagator(int q, int q_prime, const SphericalPoint& point) {
  return propagator_matrix(point)(q, q_prime);
}

}  // namespace spinpair
