#pragma once

#include <array>

#include "spinkin/linalg.hpp"
#include "spinkin/momentum.hpp"
#include "spinkin/spinor_basis.hpp"

namespace spinkin {

/// Spin-1/2 rest basis of Elko spinors on the helicity eigenvectors of
/// sigma.n: u-set {u~+, v~+}, v-set {u~-, v~-}, each of norm sqrt(2m).
SpinorBasis helicity_elko_basis(double m, const Vec3& direction);

/// Rest basis boosted to q with exp(iK.phi(q)).
SpinorBasis boost_basis(const SpinorBasis& rest, const FourMomentum& q);

struct XiSolution {
  ComplexMatrix xi_tilde;         // Xi~(0)
  ComplexMatrix xi_tilde_dagger;  // Xi~(0)^dagger = Xi(0)
  int rank = 0;                   // rank of the constraint system
  int unknowns = 0;               // d^2
  int constraints = 0;            // 4 (2j+1)^2
  double constraint_residual = 0.0;  // max |W^dag X eta W - 2m diag(1,-1)| entry
  bool unique = false;               // full column rank
};

/// Solves u^dag X eta u' = 2m delta, u^dag X eta v' = 0, v^dag X eta u' = 0,
/// v^dag X eta v' = -2m delta for X = Xi~(0)^dagger as a dense linear system
/// in the d^2 entries of X. Throws DegenerateBasisError when the system does
/// not have full column rank.
XiSolution xi_tilde_at_rest(const SpinorBasis& rest);

/// Second route to Xi~(0)^dagger: from K(0) = W diag(1,-1) W^-1 and
/// K(0) = (1/2m) (sum u u^dag + v v^dag) Xi~^dag(0) eta.
ComplexMatrix xi_tilde_dagger_from_completeness(const SpinorBasis& rest);

/// The operator with K u_sigma = u_sigma and K v_sigma = -v_sigma for the
/// spinors of `basis`, whose frame must be q. Throws DomainError on a frame
/// mismatch.
ComplexMatrix k_operator(const SpinorBasis& basis, const FourMomentum& q);

/// max |u_sigma^dag v_sigma'|.
double hermitian_overlap(const SpinorBasis& rest);

/// True iff hermitian_overlap <= abs_tol * 2m.
bool hermiticity_condition(const SpinorBasis& rest, double abs_tol = 1e-10);

/// sum_sigma u u^dag + v v^dag.
ComplexMatrix completeness_sum(const SpinorBasis& basis);

/// Orthonormalises the u-set and the v-set within their spans and rescales
/// to norm sqrt(2m); K is unchanged.
SpinorBasis orthogonalized(const SpinorBasis& rest);

struct Decomposition {
  ComplexMatrix k;       // K(q)
  ComplexMatrix xi;      // Xi(q) = B Xi~^dag(0) B^-1
  ComplexMatrix parity;  // P(q)
  /// ||m K Xi - m P||_F / ||m P||_F; equals the gamma.p residual for spin 1/2.
  double residual = 0.0;
  /// Successive distances along the chain
  /// K(q) -> (1/2m) W_q W_q^dag Xi~^dag(q) eta -> B Xi~^dag(0) B eta
  ///      -> [B Xi~^dag(0) B^-1][B eta B^-1] -> Xi(q) P(q).
  std::array<double, 4> chain{};
  XiSolution xi_solution;
};

/// Builds K(q) and Xi(q) from a rest basis (orthogonalised first) and
/// compares m K Xi with m P(q). Throws NonHermitianBasisError when the u and
/// v subspaces are not Hermitian orthogonal.
Decomposition decompose(const SpinorBasis& rest, const FourMomentum& q, double abs_tol = 1e-10);

/// ||gamma^mu p_mu - m K(q) Xi(q)||_F / ||gamma^mu p_mu||_F, spin 1/2 only.
double decomposition_residual(const SpinorBasis& rest, const FourMomentum& q);

}  // namespace spinkin
