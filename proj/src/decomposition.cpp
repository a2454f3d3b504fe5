#include "spinkin/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "spinkin/dirac.hpp"
#include "spinkin/elko.hpp"
#include "spinkin/errors.hpp"
#include "spinkin/kinematics.hpp"

namespace spinkin {

namespace {

ComplexMatrix sign_matrix(Eigen::Index n) {
  return block_diag(identity(n), -identity(n));
}

}  // namespace

SpinorBasis helicity_elko_basis(double m, const Vec3& direction) {
  if (!(m > 0.0)) throw DomainError("helicity_elko_basis: mass must be positive");
  const auto [h_plus, h_minus] = helicity_basis(direction);
  const double scale = std::sqrt(m);
  const Spinor2 up = scale * h_plus;
  const Spinor2 down = scale * h_minus;
  return SpinorBasis::create(HalfInt(1), m, Vec3::Zero(),
                             {elko_spinor(up, 1), elko_spinor(down, 1)},
                             {elko_spinor(up, -1), elko_spinor(down, -1)});
}

SpinorBasis boost_basis(const SpinorBasis& rest, const FourMomentum& q) {
  if (!rest.at_rest()) throw DomainError("boost_basis: basis is not a rest-frame basis");
  const RepGenerators rep = rep_generators(rest.j);
  return rest.transformed(boost_matrix(rep.gen, rapidity_from_momentum(q)), q);
}

XiSolution xi_tilde_at_rest(const SpinorBasis& rest) {
  if (!rest.at_rest()) throw DomainError("xi_tilde_at_rest: basis must be at rest");
  const RepGenerators rep = rep_generators(rest.j);
  const Eigen::Index d = rest.dim();
  const ComplexMatrix w = rest.stacked();
  const ComplexMatrix target = 2.0 * rest.m * sign_matrix(rest.j.multiplicity());

  // W^dag X (eta W) = 2m S  <=>  ((eta W)^T (x) W^dag) vec X = vec(2m S).
  const ComplexMatrix system = kron((rep.eta * w).transpose(), w.adjoint());
  const Eigen::Map<const ComplexVector> rhs(target.data(), d * d);

  XiSolution out;
  out.unknowns = static_cast<int>(d * d);
  out.constraints = static_cast<int>(system.rows());
  const Eigen::JacobiSVD<ComplexMatrix> svd(system);
  const auto& sv = svd.singularValues();
  out.rank = static_cast<int>((sv.array() > 1e-10 * sv(0)).count());
  out.unique = out.rank == out.unknowns;
  if (!out.unique) {
    throw DegenerateBasisError("xi_tilde_at_rest: constraint system is rank deficient");
  }
  const ComplexVector x = system.partialPivLu().solve(rhs);
  out.xi_tilde_dagger = Eigen::Map<const ComplexMatrix>(x.data(), d, d);
  out.xi_tilde = out.xi_tilde_dagger.adjoint();
  out.constraint_residual =
      (w.adjoint() * out.xi_tilde_dagger * rep.eta * w - target).cwiseAbs().maxCoeff();
  return out;
}

ComplexMatrix xi_tilde_dagger_from_completeness(const SpinorBasis& rest) {
  if (!rest.at_rest()) throw DomainError("xi_tilde_dagger_from_completeness: basis must be at rest");
  const RepGenerators rep = rep_generators(rest.j);
  const ComplexMatrix w = rest.stacked();
  const ComplexMatrix k0 = w * sign_matrix(rest.j.multiplicity()) * w.inverse();
  // K(0) = (1/2m) C X eta  =>  X = 2m C^-1 K(0) eta, using eta^2 = 1.
  return 2.0 * rest.m * completeness_sum(rest).partialPivLu().solve(k0 * rep.eta);
}

ComplexMatrix k_operator(const SpinorBasis& basis, const FourMomentum& q) {
  if ((basis.p - q.momentum()).norm() > 1e-12 * (1.0 + q.momentum().norm())) {
    throw DomainError("k_operator: basis frame does not match the momentum");
  }
  const ComplexMatrix w = basis.stacked();
  return w * sign_matrix(basis.j.multiplicity()) * w.partialPivLu().inverse();
}

double hermitian_overlap(const SpinorBasis& rest) {
  double worst = 0.0;
  for (const auto& u : rest.u) {
    for (const auto& v : rest.v) worst = std::max(worst, std::abs(u.dot(v)));
  }
  return worst;
}

bool hermiticity_condition(const SpinorBasis& rest, double abs_tol) {
  return hermitian_overlap(rest) <= abs_tol * 2.0 * rest.m;
}

ComplexMatrix completeness_sum(const SpinorBasis& basis) {
  const ComplexMatrix w = basis.stacked();
  return w * w.adjoint();
}

SpinorBasis orthogonalized(const SpinorBasis& rest) {
  const double scale = std::sqrt(2.0 * rest.m);
  auto orthonormal = [&](const std::vector<ComplexVector>& set) {
    ComplexMatrix a(rest.dim(), static_cast<Eigen::Index>(set.size()));
    for (std::size_t k = 0; k < set.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = set[k];
    const Eigen::HouseholderQR<ComplexMatrix> qr(a);
    const ComplexMatrix q =
        qr.householderQ() * ComplexMatrix::Identity(a.rows(), a.cols());
    std::vector<ComplexVector> out;
    for (Eigen::Index k = 0; k < q.cols(); ++k) out.emplace_back(scale * q.col(k));
    return out;
  };
  return SpinorBasis::create(rest.j, rest.m, rest.p, orthonormal(rest.u), orthonormal(rest.v));
}

Decomposition decompose(const SpinorBasis& rest, const FourMomentum& q, double abs_tol) {
  if (!rest.at_rest()) throw DomainError("decompose: basis must be at rest");
  if (std::abs(rest.m - q.mass()) > 1e-12 * q.mass()) {
    throw DomainError("decompose: basis mass differs from the momentum's mass");
  }
  if (!hermiticity_condition(rest, abs_tol)) {
    throw NonHermitianBasisError(
        "decompose: u and v subspaces are not Hermitian orthogonal; K(0) is not Hermitian");
  }
  const SpinorBasis basis = orthogonalized(rest);
  const RepGenerators rep = rep_generators(basis.j);
  const Vec3 phi = rapidity_from_momentum(q);
  const ComplexMatrix b = boost_matrix(rep.gen, phi);
  const ComplexMatrix b_inv = boost_matrix(rep.gen, -phi);

  Decomposition out;
  out.xi_solution = xi_tilde_at_rest(basis);
  const ComplexMatrix& x = out.xi_solution.xi_tilde_dagger;  // Xi(0)
  const SpinorBasis moved = basis.transformed(b, q);
  out.k = k_operator(moved, q);
  out.xi = b * x * b_inv;
  out.parity = parity_operator(rep, q);

  const ComplexMatrix xi_tilde_q = b * out.xi_solution.xi_tilde * b_inv;
  const std::array<ComplexMatrix, 5> steps = {
      out.k,
      completeness_sum(moved) * xi_tilde_q.adjoint() * rep.eta / (2.0 * basis.m),
      b * x * b * rep.eta,
      (b * x * b_inv) * (b * rep.eta * b_inv),
      out.xi * out.parity,
  };
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    out.chain[k] = relative_distance(steps[k], steps[k + 1]);
  }
  out.residual = relative_distance(out.k * out.xi, out.parity);
  return out;
}

double decomposition_residual(const SpinorBasis& rest, const FourMomentum& q) {
  if (rest.j.twice() != 1) throw DomainError("decomposition_residual: spin 1/2 only");
  const Decomposition dec = decompose(rest, q);
  const ComplexMatrix gp = dirac_operator(q);
  return relative_distance(q.mass() * dec.k * dec.xi, gp);
}

}  // namespace spinkin
