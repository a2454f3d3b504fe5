#pragma once

#include <array>
#include <utility>

#include "spinkin/linalg.hpp"
#include "spinkin/lorentz_rep.hpp"
#include "spinkin/momentum.hpp"
#include "spinkin/spinor_basis.hpp"

namespace spinkin {

/// Chiral-basis gamma matrices with g = diag(+1, -1, -1, -1):
/// gamma^0 = [[0, 1], [1, 0]], gamma^i = [[0, -sigma_i], [sigma_i, 0]].
/// With boosts exp(+sigma.phi/2) on the top block this makes
/// gamma^mu p_mu = m exp(2iK.phi) eta.
struct GammaSet {
  std::array<ComplexMatrix, 4> gamma;

  const ComplexMatrix& operator[](int mu) const { return gamma.at(static_cast<std::size_t>(mu)); }
};

GammaSet gamma_matrices();

std::array<ComplexMatrix, 3> pauli_matrices();

/// gamma^mu p_mu = gamma^0 E - sum_i gamma^i p^i.
ComplexMatrix dirac_operator(const FourMomentum& q);

/// u_sigma(0) = sqrt(m) (theta_sigma, theta_sigma), v_sigma(0) =
/// sqrt(m) (theta_sigma, -theta_sigma) with theta_sigma the J_z eigenbasis,
/// so every spinor has norm sqrt(2m).
SpinorBasis rest_spinors(HalfInt j, double m = 1.0);

/// rest_spinors(j, q.mass()) boosted by exp(iK.phi(q)).
SpinorBasis boosted_spinors(HalfInt j, const FourMomentum& q);

/// ||(gamma^mu p_mu - sign m) psi|| / (m ||psi||). Throws DomainError for a
/// zero spinor or sign other than +-1.
double dirac_residual(const ComplexVector& psi, const FourMomentum& q, int sign);

/// Splits a rest spinor (theta, lambda) into its eta = +1 part
/// ((theta+lambda)/2, (lambda+theta)/2) and eta = -1 part
/// ((theta-lambda)/2, (lambda-theta)/2).
std::pair<ComplexVector, ComplexVector> split_rest_spinor(const ComplexVector& psi);

}  // namespace spinkin
