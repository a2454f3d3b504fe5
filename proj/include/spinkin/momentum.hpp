#pragma once

#include "spinkin/linalg.hpp"

namespace spinkin {

/// On-shell four-momentum of a massive particle, natural units.
/// The energy is derived, so E^2 - |p|^2 = m^2 holds by construction.
class FourMomentum {
 public:
  /// Throws DomainError unless m > 0 and every component is finite.
  FourMomentum(double mass, const Vec3& momentum);

  static FourMomentum at_rest(double mass) { return FourMomentum(mass, Vec3::Zero()); }

  double mass() const { return m_; }
  const Vec3& momentum() const { return p_; }
  double energy() const { return e_; }

  /// Contravariant components (E, p^1, p^2, p^3).
  Eigen::Vector4d contravariant() const;
  /// Covariant components p_mu = (E, -p^1, -p^2, -p^3).
  Eigen::Vector4d covariant() const;

 private:
  double m_;
  Vec3 p_;
  double e_;
};

}  // namespace spinkin
