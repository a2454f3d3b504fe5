#include "spinkin/sampling.hpp"

#include <cmath>
#include <numbers>

namespace spinkin {

double Rng::normal() {
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec3 Rng::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

FourMomentum sample_momentum(Rng& rng) {
  const double m = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
  const double p = rng.uniform(0.0, 5.0 * m);
  return FourMomentum(m, p * rng.unit_vector());
}

Vec3 sample_ball(Rng& rng, double max_norm) {
  const double r = rng.uniform(0.0, max_norm);
  return r * rng.unit_vector();
}

}  // namespace spinkin
