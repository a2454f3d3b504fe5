#pragma once

#include <cstdint>
#include <random>

#include "spinkin/linalg.hpp"
#include "spinkin/momentum.hpp"

namespace spinkin {

/// Seeded generator with a fixed double mapping, so a given seed yields the
/// same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  Vec3 unit_vector();
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
};

/// m log-uniform in [0.1, 10], |p| uniform in [0, 5m], isotropic direction.
FourMomentum sample_momentum(Rng& rng);

/// Isotropic vector with norm uniform in [0, max_norm]; used for boost
/// rapidities and rotation angle vectors.
Vec3 sample_ball(Rng& rng, double max_norm);

}  // namespace spinkin
