#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "spinkin/linalg.hpp"
#include "spinkin/lorentz_rep.hpp"
#include "spinkin/momentum.hpp"

namespace spinkin {

/// ||(P_j(q) - sign) psi|| / ||psi||, with P_j evaluated as exp(2iK.phi) eta.
double field_equation_residual(HalfInt j, const ComplexVector& psi, const FourMomentum& q,
                               int sign);

/// ||P_j(q)^2 - 1||_F / dim.
double contraction_identity_residual(HalfInt j, const FourMomentum& q);

struct ParitySpectrum {
  std::vector<Complex> eigenvalues;
  Complex det;
  int plus_count = 0;   // eigenvalues within tol of +1
  int minus_count = 0;  // eigenvalues within tol of -1
  double max_deviation = 0.0;  // max distance of an eigenvalue from {+1, -1}
};

ParitySpectrum parity_spectrum(HalfInt j, const FourMomentum& q, double tol = 1e-7);

/// Sorted multi-index (mu_1 <= ... <= mu_n), mu in {0, 1, 2, 3}.
using MultiIndex = std::vector<int>;

/// All sorted multi-indices of the given order, in lexicographic order.
std::vector<MultiIndex> symmetric_multi_indices(int order);

/// Number of distinct orderings of a sorted multi-index.
long long multiset_permutations(const MultiIndex& index);

/// Symmetric rank-2j tensor of matrices gamma^{mu_1...mu_2j}, stored once
/// per sorted multi-index.
class GammaTensor {
 public:
  GammaTensor(HalfInt j, std::map<MultiIndex, ComplexMatrix> components);

  HalfInt spin() const { return j_; }
  const std::map<MultiIndex, ComplexMatrix>& components() const { return components_; }

  /// Component for any ordering of the indices.
  const ComplexMatrix& component(MultiIndex index) const;

  /// gamma^{mu_1...mu_2j} p_{mu_1} ... p_{mu_2j} over all orderings.
  ComplexMatrix contract(const FourMomentum& q) const;

  // Fit diagnostics filled in by extract_gamma_tensor.
  std::uint64_t seed = 0;
  int sample_count = 0;
  int rank = 0;
  double fit_residual = 0.0;       // max relative residual on fitted samples
  double holdout_residual = 0.0;   // max relative residual on fresh samples

 private:
  HalfInt j_;
  std::map<MultiIndex, ComplexMatrix> components_;
};

/// Least-squares fit of the symmetric tensor to m^{2j} P_j(q) over on-shell
/// samples drawn with sample_momentum (several masses). Rows are scaled by
/// m^{-2j}; the minimum-norm solution is taken and full column rank is
/// required (RankDeficientError otherwise). sample_count must be at least
/// 3x the number of sorted multi-indices.
GammaTensor extract_gamma_tensor(HalfInt j, int sample_count, std::uint64_t seed = 42,
                                 int holdout_count = 200);

/// Swap S(x (x) y) = y (x) x on the (2j+1)^2-dimensional tensor space.
ComplexMatrix tensor_swap_operator(HalfInt j);

/// t(psi_R, psi_L) = psi_R (x) psi_L.
ComplexVector tensor_product_map(const ComplexVector& psi);

/// S transported to momentum q with the (j,0)x(0,j) boost.
ComplexMatrix boosted_swap_operator(HalfInt j, const FourMomentum& q);

/// ||t(P psi) - A t(psi)|| / ||t(psi)|| with P the spin-j parity operator and
/// A the boosted swap, both at q.
double swap_intertwining_residual(HalfInt j, const ComplexVector& psi, const FourMomentum& q);

}  // namespace spinkin
