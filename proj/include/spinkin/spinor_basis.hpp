#pragma once

#include <vector>

#include "spinkin/linalg.hpp"
#include "spinkin/lorentz_rep.hpp"
#include "spinkin/momentum.hpp"

namespace spinkin {

/// 2j+1 "u" spinors and 2j+1 "v" spinors of (j,0)+(0,j) in the frame where
/// the particle has 3-momentum `p`. Index k of u/v carries the label
/// sigma = j - k.
struct SpinorBasis {
  HalfInt j;
  double m;
  Vec3 p;
  std::vector<ComplexVector> u;
  std::vector<ComplexVector> v;

  /// Validates counts and dimensions, linear independence and, for a rest
  /// frame basis, that every spinor has norm sqrt(2m) to relative `tol`.
  /// Throws DimensionError or DegenerateBasisError.
  static SpinorBasis create(HalfInt j, double m, const Vec3& p, std::vector<ComplexVector> u,
                            std::vector<ComplexVector> v, double tol = 1e-10);

  Eigen::Index dim() const { return 2 * j.multiplicity(); }
  bool at_rest() const { return p.isZero(0.0); }

  /// Columns u_j .. u_-j, v_j .. v_-j.
  ComplexMatrix stacked() const;

  /// Every spinor multiplied by `b`, frame set to q.
  SpinorBasis transformed(const ComplexMatrix& b, const FourMomentum& q) const;
};

}  // namespace spinkin
