#include "spinkin/higher_spin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "spinkin/errors.hpp"
#include "spinkin/kinematics.hpp"
#include "spinkin/sampling.hpp"

namespace spinkin {

double field_equation_residual(HalfInt j, const ComplexVector& psi, const FourMomentum& q,
                               int sign) {
  if (sign != 1 && sign != -1) throw DomainError("field_equation_residual: sign must be +-1");
  const RepGenerators rep = rep_generators(j);
  if (psi.size() != rep.dim()) throw DimensionError("field_equation_residual: wrong length");
  const double norm = psi.norm();
  if (norm == 0.0) throw DomainError("field_equation_residual: zero spinor");
  const ComplexMatrix p = parity_operator(rep, q);
  return (p * psi - sign * psi).norm() / norm;
}

double contraction_identity_residual(HalfInt j, const FourMomentum& q) {
  const RepGenerators rep = rep_generators(j);
  const ComplexMatrix p = parity_operator(rep, q);
  return (p * p - identity(rep.dim())).norm() / static_cast<double>(rep.dim());
}

ParitySpectrum parity_spectrum(HalfInt j, const FourMomentum& q, double tol) {
  const RepGenerators rep = rep_generators(j);
  const ComplexMatrix p = parity_operator(rep, q);
  const Eigen::ComplexEigenSolver<ComplexMatrix> solver(p, false);
  ParitySpectrum out;
  out.det = p.partialPivLu().determinant();
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const Complex ev = solver.eigenvalues()(i);
    out.eigenvalues.push_back(ev);
    const double to_plus = std::abs(ev - 1.0);
    const double to_minus = std::abs(ev + 1.0);
    out.max_deviation = std::max(out.max_deviation, std::min(to_plus, to_minus));
    if (to_plus <= tol) ++out.plus_count;
    if (to_minus <= tol) ++out.minus_count;
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](Complex a, Complex b) { return a.real() > b.real(); });
  return out;
}

std::vector<MultiIndex> symmetric_multi_indices(int order) {
  std::vector<MultiIndex> out;
  MultiIndex current(static_cast<std::size_t>(order), 0);
  if (order == 0) return {current};
  while (true) {
    out.push_back(current);
    // Next non-decreasing sequence over {0..3}.
    int pos = order - 1;
    while (pos >= 0 && current[static_cast<std::size_t>(pos)] == 3) --pos;
    if (pos < 0) break;
    const int next = current[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k < order; ++k) current[static_cast<std::size_t>(k)] = next;
  }
  return out;
}

long long multiset_permutations(const MultiIndex& index) {
  auto factorial = [](int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  std::array<int, 4> counts{};
  for (int mu : index) ++counts.at(static_cast<std::size_t>(mu));
  long long result = factorial(static_cast<int>(index.size()));
  for (int c : counts) result /= factorial(c);
  return result;
}

GammaTensor::GammaTensor(HalfInt j, std::map<MultiIndex, ComplexMatrix> components)
    : j_(j), components_(std::move(components)) {
  for (const auto& [index, matrix] : components_) {
    if (static_cast<int>(index.size()) != j.twice() ||
        !std::is_sorted(index.begin(), index.end())) {
      throw DimensionError("gamma tensor: keys must be sorted multi-indices of order 2j");
    }
    if (matrix.rows() != 2 * j.multiplicity() || matrix.cols() != 2 * j.multiplicity()) {
      throw DimensionError("gamma tensor: component has wrong size");
    }
  }
}

const ComplexMatrix& GammaTensor::component(MultiIndex index) const {
  std::sort(index.begin(), index.end());
  const auto it = components_.find(index);
  if (it == components_.end()) throw DimensionError("gamma tensor: no such component");
  return it->second;
}

namespace {

double monomial(const MultiIndex& index, const Eigen::Vector4d& lower) {
  double value = 1.0;
  for (int mu : index) value *= lower(mu);
  return value;
}

}  // namespace

ComplexMatrix GammaTensor::contract(const FourMomentum& q) const {
  const Eigen::Vector4d lower = q.covariant();
  const Eigen::Index d = 2 * j_.multiplicity();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& [index, matrix] : components_) {
    out += static_cast<double>(multiset_permutations(index)) * monomial(index, lower) * matrix;
  }
  return out;
}

GammaTensor extract_gamma_tensor(HalfInt j, int sample_count, std::uint64_t seed,
                                 int holdout_count) {
  const std::vector<MultiIndex> indices = symmetric_multi_indices(j.twice());
  const auto unknowns = static_cast<Eigen::Index>(indices.size());
  if (sample_count < 3 * unknowns) {
    throw DomainError("extract_gamma_tensor: need at least " + std::to_string(3 * unknowns) +
                      " samples for spin 2j=" + std::to_string(j.twice()));
  }
  const RepGenerators rep = rep_generators(j);
  const Eigen::Index d = rep.dim();

  // Row s: sum_S mult(S) prod_{mu in S} (p_mu/m) * gamma_S = P_j(q_s), the
  // homogeneous form of m^{2j} P_j = gamma.p...p divided by m^{2j}.
  Rng rng(seed);
  std::vector<FourMomentum> samples;
  samples.reserve(static_cast<std::size_t>(sample_count));
  ComplexMatrix design(sample_count, unknowns);
  ComplexMatrix rhs(sample_count, d * d);
  for (int s = 0; s < sample_count; ++s) {
    const FourMomentum q = sample_momentum(rng);
    samples.push_back(q);
    const Eigen::Vector4d lower = q.covariant() / q.mass();
    for (Eigen::Index k = 0; k < unknowns; ++k) {
      const auto& idx = indices[static_cast<std::size_t>(k)];
      design(s, k) = static_cast<double>(multiset_permutations(idx)) * monomial(idx, lower);
    }
    const ComplexMatrix target = parity_operator(rep, q);
    rhs.row(s) = Eigen::Map<const Eigen::RowVectorXcd>(target.data(), d * d);
  }

  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(design);
  cod.setThreshold(1e-12);
  if (cod.rank() < unknowns) {
    throw RankDeficientError("extract_gamma_tensor: sample set is rank deficient, resample");
  }
  const ComplexMatrix solution = cod.solve(rhs);

  std::map<MultiIndex, ComplexMatrix> components;
  for (Eigen::Index k = 0; k < unknowns; ++k) {
    const Eigen::RowVectorXcd row = solution.row(k);
    components.emplace(indices[static_cast<std::size_t>(k)],
                       Eigen::Map<const ComplexMatrix>(row.data(), d, d));
  }
  GammaTensor tensor(j, std::move(components));
  tensor.seed = seed;
  tensor.sample_count = sample_count;
  tensor.rank = static_cast<int>(cod.rank());

  auto relative = [&](const FourMomentum& q) {
    const ComplexMatrix target =
        std::pow(q.mass(), j.twice()) * parity_operator(rep, q);
    return relative_distance(tensor.contract(q), target);
  };
  for (const auto& q : samples) tensor.fit_residual = std::max(tensor.fit_residual, relative(q));
  Rng holdout(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int s = 0; s < holdout_count; ++s) {
    tensor.holdout_residual = std::max(tensor.holdout_residual, relative(sample_momentum(holdout)));
  }
  return tensor;
}

ComplexMatrix tensor_swap_operator(HalfInt j) {
  const Eigen::Index n = j.multiplicity();
  ComplexMatrix s = ComplexMatrix::Zero(n * n, n * n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) s(b * n + a, a * n + b) = 1.0;
  }
  return s;
}

ComplexVector tensor_product_map(const ComplexVector& psi) {
  if (psi.size() % 2 != 0) throw DimensionError("tensor_product_map: odd length");
  const Eigen::Index n = psi.size() / 2;
  return kron(psi.head(n), psi.tail(n));
}

ComplexMatrix boosted_swap_operator(HalfInt j, const FourMomentum& q) {
  const TensorRepGenerators rep = tensor_rep_generators(j);
  const KinematicOperatorFamily fam{rep.gen, tensor_swap_operator(j), false};
  return fam.at(q);
}

double swap_intertwining_residual(HalfInt j, const ComplexVector& psi, const FourMomentum& q) {
  const RepGenerators rep = rep_generators(j);
  if (psi.size() != rep.dim()) throw DimensionError("swap_intertwining_residual: wrong length");
  const ComplexVector t_psi = tensor_product_map(psi);
  const double norm = t_psi.norm();
  if (norm == 0.0) throw DomainError("swap_intertwining_residual: t(psi) vanishes");
  const ComplexVector lhs = tensor_product_map(parity_operator(rep, q) * psi);
  const ComplexVector rhs = boosted_swap_operator(j, q) * t_psi;
  return (lhs - rhs).norm() / norm;
}

}  // namespace spinkin
