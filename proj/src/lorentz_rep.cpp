#include "spinkin/lorentz_rep.hpp"

#include <cmath>
#include <string>

#include "spinkin/errors.hpp"

namespace spinkin {

HalfInt::HalfInt(int twice_value) : twice_(twice_value) {
  if (twice_value < 1) {
    throw DomainError("spin 2j must be a positive integer, got " + std::to_string(twice_value));
  }
}

double LorentzTransform::metric_residual() const {
  const Eigen::Matrix4d g = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return (matrix.transpose() * g * matrix - g).norm();
}

GeneratorTriple spin_matrices(HalfInt j) {
  const int n = j.multiplicity();
  const double jv = j.value();
  ComplexMatrix raise = ComplexMatrix::Zero(n, n);
  ComplexMatrix jz = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double m = jv - i;
    jz(i, i) = m;
    // J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, and |m+1> sits at row i-1.
    if (i > 0) raise(i - 1, i) = std::sqrt(jv * (jv + 1.0) - m * (m + 1.0));
  }
  const ComplexMatrix lower = raise.adjoint();
  ComplexMatrix jx = 0.5 * (raise + lower);
  ComplexMatrix jy = (raise - lower) / (2.0 * kI);
  return {std::move(jx), std::move(jy), std::move(jz)};
}

ComplexMatrix wigner_theta(HalfInt j) {
  const int n = j.multiplicity();
  ComplexMatrix theta = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    // m = j - i, so j + m = 2j - i, and -m sits at column 2j - i.
    theta(i, j.twice() - i) = ((j.twice() - i) % 2 == 0) ? 1.0 : -1.0;
  }
  return theta;
}

ComplexMatrix block_swap(Eigen::Index n) { return block_offdiag(identity(n), identity(n)); }

RepGenerators rep_generators(HalfInt j) {
  const GeneratorTriple s = spin_matrices(j);
  Generators gen;
  for (int a = 0; a < 3; ++a) {
    gen.rotation[a] = block_diag(s[a], s[a]);
    gen.boost[a] = block_diag(-kI * s[a], kI * s[a]);
  }
  return RepGenerators{j, std::move(gen), block_swap(j.multiplicity())};
}

TensorRepGenerators tensor_rep_generators(HalfInt j) {
  const GeneratorTriple s = spin_matrices(j);
  const ComplexMatrix id = identity(j.multiplicity());
  Generators gen;
  for (int a = 0; a < 3; ++a) {
    gen.rotation[a] = kron(s[a], id) + kron(id, s[a]);
    gen.boost[a] = kron(-kI * s[a], id) + kron(id, kI * s[a]);
  }
  return TensorRepGenerators{j, std::move(gen)};
}

ComplexMatrix contract(const GeneratorTriple& m, const Vec3& v) {
  return m[0] * v.x() + m[1] * v.y() + m[2] * v.z();
}

LorentzTransform vector_boost(const Vec3& phi) {
  if (!phi.allFinite()) throw DomainError("vector_boost: non-finite rapidity");
  const double r = phi.norm();
  if (r > kMaxRapidity) {
    throw OverflowError("vector_boost: rapidity " + std::to_string(r) + " exceeds cap");
  }
  Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
  if (r == 0.0) return {l};
  const Vec3 n = phi / r;
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  l(0, 0) = ch;
  l.block<1, 3>(0, 1) = sh * n.transpose();
  l.block<3, 1>(1, 0) = sh * n;
  l.block<3, 3>(1, 1) = Eigen::Matrix3d::Identity() + (ch - 1.0) * n * n.transpose();
  return {l};
}

LorentzTransform vector_rotation(const Vec3& theta) {
  if (!theta.allFinite()) throw DomainError("vector_rotation: non-finite angle");
  Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
  const double angle = theta.norm();
  if (angle > 0.0) {
    l.block<3, 3>(1, 1) = Eigen::AngleAxisd(angle, theta / angle).toRotationMatrix();
  }
  return {l};
}

}  // namespace spinkin
