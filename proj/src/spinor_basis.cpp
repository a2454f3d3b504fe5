#include "spinkin/spinor_basis.hpp"

#include <cmath>

#include "spinkin/errors.hpp"

namespace spinkin {

SpinorBasis SpinorBasis::create(HalfInt j, double m, const Vec3& p, std::vector<ComplexVector> u,
                                std::vector<ComplexVector> v, double tol) {
  if (!(m > 0.0)) throw DomainError("spinor basis: mass must be positive");
  const auto n = static_cast<std::size_t>(j.multiplicity());
  if (u.size() != n || v.size() != n) {
    throw DimensionError("spinor basis: expected 2j+1 u and 2j+1 v spinors");
  }
  SpinorBasis basis{j, m, p, std::move(u), std::move(v)};
  for (const auto* set : {&basis.u, &basis.v}) {
    for (const auto& s : *set) {
      if (s.size() != basis.dim()) throw DimensionError("spinor basis: wrong spinor length");
      if (!s.allFinite()) throw DomainError("spinor basis: non-finite spinor");
      if (basis.at_rest() && std::abs(s.norm() - std::sqrt(2.0 * m)) > tol * std::sqrt(2.0 * m)) {
        throw DomainError("spinor basis: rest spinors must have norm sqrt(2m)");
      }
    }
  }
  const Eigen::JacobiSVD<ComplexMatrix> svd(basis.stacked());
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= tol * sv(0)) {
    throw DegenerateBasisError("spinor basis: spinors are linearly dependent");
  }
  return basis;
}

ComplexMatrix SpinorBasis::stacked() const {
  const auto n = static_cast<Eigen::Index>(u.size());
  ComplexMatrix w(dim(), 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    w.col(k) = u[k];
    w.col(n + k) = v[k];
  }
  return w;
}

SpinorBasis SpinorBasis::transformed(const ComplexMatrix& b, const FourMomentum& q) const {
  SpinorBasis out{j, m, q.momentum(), {}, {}};
  for (const auto& s : u) out.u.emplace_back(b * s);
  for (const auto& s : v) out.v.emplace_back(b * s);
  return out;
}

}  // namespace spinkin
