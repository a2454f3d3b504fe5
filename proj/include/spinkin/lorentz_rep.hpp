#pragma once

#include <array>

#include <Eigen/Dense>

#include "spinkin/linalg.hpp"

namespace spinkin {

/// Spin label j stored as 2j so half-integers are exact.
class HalfInt {
 public:
  /// Throws DomainError unless twice_value >= 1.
  explicit HalfInt(int twice_value);

  int twice() const { return twice_; }
  double value() const { return 0.5 * twice_; }
  /// 2j + 1, the dimension of one chiral block.
  int multiplicity() const { return twice_ + 1; }

  friend bool operator==(HalfInt, HalfInt) = default;

 private:
  int twice_;
};

using GeneratorTriple = std::array<ComplexMatrix, 3>;

/// Rotation generators J_a and boost generators K_a of a Lorentz-group
/// representation, in the convention [J_a, J_b] = i eps J_c,
/// [K_a, K_b] = -i eps J_c. Group elements are exp(-i J.theta) for an active
/// rotation by theta and exp(i K.phi) for a boost of rapidity phi.
struct Generators {
  GeneratorTriple rotation;
  GeneratorTriple boost;

  Eigen::Index dim() const { return rotation[0].rows(); }
};

/// Generators of (j,0)+(0,j). The top block is the (j,0) component, the
/// bottom block the (0,j) component; eta swaps them.
struct RepGenerators {
  HalfInt j;
  Generators gen;
  ComplexMatrix eta;

  Eigen::Index dim() const { return gen.dim(); }
};

/// Generators of the (2j+1)^2-dimensional (j,0)x(0,j) representation.
struct TensorRepGenerators {
  HalfInt j;
  Generators gen;

  Eigen::Index dim() const { return gen.dim(); }
};

/// Pure Lorentz transformation acting on contravariant (p^0, p^1, p^2, p^3).
struct LorentzTransform {
  Eigen::Matrix4d matrix;

  Eigen::Vector4d apply(const Eigen::Vector4d& p) const { return matrix * p; }
  LorentzTransform then(const LorentzTransform& next) const { return {next.matrix * matrix}; }
  /// ||L^T g L - g||_F with g = diag(1, -1, -1, -1).
  double metric_residual() const;
};

inline constexpr double kMaxRapidity = 30.0;

/// Spin-j angular momentum matrices in the J_z eigenbasis ordered
/// m = j, j-1, ..., -j.
GeneratorTriple spin_matrices(HalfInt j);

RepGenerators rep_generators(HalfInt j);

/// J = J x 1 + 1 x J, K = (-iJ) x 1 + 1 x (iJ).
TensorRepGenerators tensor_rep_generators(HalfInt j);

/// Pure boost of rapidity |phi| along phi^. Throws OverflowError beyond
/// kMaxRapidity.
LorentzTransform vector_boost(const Vec3& phi);

/// Active rotation by |theta| about theta^ (right-hand rule).
LorentzTransform vector_rotation(const Vec3& theta);

/// sum_a m[a] * v[a]
ComplexMatrix contract(const GeneratorTriple& m, const Vec3& v);

/// Wigner time-reversal matrix, Theta_{m,m'} = (-1)^(j+m) delta_{m,-m'}, so
/// that Theta J_a Theta^-1 = -conj(J_a). For j = 1/2 this is [[0, -1], [1, 0]].
ComplexMatrix wigner_theta(HalfInt j);

/// Permutation block-swap matrix [[0, 1], [1, 0]] with blocks of size n.
ComplexMatrix block_swap(Eigen::Index n);

}  // namespace spinkin
