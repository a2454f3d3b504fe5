#include "spinkin/dirac.hpp"

#include <cmath>

#include "spinkin/errors.hpp"
#include "spinkin/kinematics.hpp"

namespace spinkin {

std::array<ComplexMatrix, 3> pauli_matrices() {
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, -kI, kI, 0.0;
  sz << 1.0, 0.0, 0.0, -1.0;
  return {sx, sy, sz};
}

GammaSet gamma_matrices() {
  const auto sigma = pauli_matrices();
  GammaSet set;
  set.gamma[0] = block_swap(2);
  for (int i = 0; i < 3; ++i) set.gamma[i + 1] = block_offdiag(-sigma[i], sigma[i]);
  return set;
}

ComplexMatrix dirac_operator(const FourMomentum& q) {
  const GammaSet g = gamma_matrices();
  const Eigen::Vector4d lower = q.covariant();
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (int mu = 0; mu < 4; ++mu) out += lower(mu) * g[mu];
  return out;
}

SpinorBasis rest_spinors(HalfInt j, double m) {
  if (!(m > 0.0)) throw DomainError("rest_spinors: mass must be positive");
  const Eigen::Index n = j.multiplicity();
  const double scale = std::sqrt(m);
  std::vector<ComplexVector> u, v;
  for (Eigen::Index k = 0; k < n; ++k) {
    ComplexVector theta = ComplexVector::Unit(n, k);
    ComplexVector us(2 * n), vs(2 * n);
    us << theta, theta;
    vs << theta, -theta;
    u.emplace_back(scale * us);
    v.emplace_back(scale * vs);
  }
  return SpinorBasis::create(j, m, Vec3::Zero(), std::move(u), std::move(v));
}

SpinorBasis boosted_spinors(HalfInt j, const FourMomentum& q) {
  const RepGenerators rep = rep_generators(j);
  const ComplexMatrix b = boost_matrix(rep.gen, rapidity_from_momentum(q));
  return rest_spinors(j, q.mass()).transformed(b, q);
}

double dirac_residual(const ComplexVector& psi, const FourMomentum& q, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("dirac_residual: sign must be +1 or -1");
  if (psi.size() != 4) throw DimensionError("dirac_residual: expected a 4-spinor");
  const double norm = psi.norm();
  if (norm == 0.0) throw DomainError("dirac_residual: zero spinor");
  const ComplexMatrix op = dirac_operator(q) - sign * q.mass() * identity(4);
  return (op * psi).norm() / (q.mass() * norm);
}

std::pair<ComplexVector, ComplexVector> split_rest_spinor(const ComplexVector& psi) {
  if (psi.size() % 2 != 0) throw DimensionError("split_rest_spinor: odd length");
  const Eigen::Index n = psi.size() / 2;
  const ComplexVector theta = psi.head(n);
  const ComplexVector lambda = psi.tail(n);
  ComplexVector plus(2 * n), minus(2 * n);
  plus << 0.5 * (theta + lambda), 0.5 * (lambda + theta);
  minus << 0.5 * (theta - lambda), 0.5 * (lambda - theta);
  return {plus, minus};
}

}  // namespace spinkin
