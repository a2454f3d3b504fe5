#pragma once

#include <cstdint>

#include "spinkin/linalg.hpp"
#include "spinkin/lorentz_rep.hpp"
#include "spinkin/momentum.hpp"

namespace spinkin {

/// phi = asinh(|p|/m) p^, zero at rest. Throws OverflowError if |phi| > 30.
Vec3 rapidity_from_momentum(const FourMomentum& q);

/// exp(i K.phi) in the given representation.
ComplexMatrix boost_matrix(const Generators& gen, const Vec3& phi);

/// exp(-i J.theta), the spinor lift of vector_rotation(theta).
ComplexMatrix rotation_matrix(const Generators& gen, const Vec3& theta);

/// P(q) = exp(2i K.phi) eta.
ComplexMatrix parity_operator(const RepGenerators& rep, const FourMomentum& q);

/// The same operator evaluated as B(phi) eta B(phi)^-1.
ComplexMatrix parity_operator_conjugated(const RepGenerators& rep, const FourMomentum& q);

/// Operator family fixed by its rest-frame matrix and transported to any
/// momentum by A(p) = B(phi) A(0) B(phi)^-1 (with the anti-linear rule
/// B M conj(B^-1) when `antilinear`, M being the linear part).
struct KinematicOperatorFamily {
  Generators gen;
  ComplexMatrix rest_matrix;
  bool antilinear = false;

  /// Linear part of A(q).
  ComplexMatrix at(const FourMomentum& q) const;
  /// Linear part of A(q)^2, i.e. A A (linear) or A conj(A) (anti-linear).
  ComplexMatrix square(const ComplexMatrix& a) const;
  /// Linear part of D A D^-1.
  ComplexMatrix conjugate_by(const ComplexMatrix& d, const ComplexMatrix& a) const;
  /// max_a ||{A(0), iK_a}||_F, the anticommutator taken against the
  /// generator appearing in exp(iK.phi); for linear A this is ||{A(0), K_a}||.
  double anticommutator_residual() const;

  static KinematicOperatorFamily parity(const RepGenerators& rep);
  /// A(0) = [[0, a 1], [a^-1 1, 0]] on (j,0)+(0,j).
  static KinematicOperatorFamily scaled_swap(const RepGenerators& rep, Complex a);
  /// Anti-linear A(0) = diag(a T, b T) o conj with T the Wigner matrix (spin 1/2 only).
  static KinematicOperatorFamily antilinear_theta(const RepGenerators& rep, Complex a, Complex b);
};

/// ||A(Lq) - D A(q) D^-1||_F / ||A(q)||_F. D must be the spinor
/// representative of L. Throws OffShellError if Lq is not on the mass shell.
double covariance_residual(const KinematicOperatorFamily& fam, const FourMomentum& q,
                           const LorentzTransform& lambda, const ComplexMatrix& d);

struct KinematicReport {
  std::uint64_t seed = 0;
  int samples = 0;
  double tol = 0.0;
  double max_square_residual = 0.0;          // ||A(p)^2 - 1||_F
  double max_anticommutator_residual = 0.0;  // ||{A(0), iK_a}||_F
  double max_covariance_residual = 0.0;      // boosts and rotations
  bool squares_to_identity = false;
  bool anticommutes = false;
  bool covariant = false;

  bool fully_kinematic() const { return squares_to_identity && anticommutes && covariant; }
};

/// Checks the two fully-kinematic conditions and covariance over `samples`
/// random momenta, each paired with one random boost (|phi| <= 1) and one
/// random rotation. Momenta follow sample_momentum.
KinematicReport is_fully_kinematic(const KinematicOperatorFamily& fam, int samples, double tol,
                                   std::uint64_t seed = 42);

}  // namespace spinkin
