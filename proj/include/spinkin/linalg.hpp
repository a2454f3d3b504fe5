#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace spinkin {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

inline constexpr Complex kI{0.0, 1.0};

/// Numerical tolerances shared by the checkers. All fields must be > 0.
struct ToleranceConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double expm_tol = 1e-13;

  void validate() const;

  /// Defaults, with abs_tol and rel_tol overridden by SPINKIN_TOL when set.
  static ToleranceConfig from_env();
};

/// Anti-linear map psi -> M conj(psi), stored by its linear part M.
class AntiLinearMap {
 public:
  explicit AntiLinearMap(ComplexMatrix linear_part);

  const ComplexMatrix& linear_part() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  ComplexVector apply(const ComplexVector& psi) const;
  ComplexVector operator()(const ComplexVector& psi) const { return apply(psi); }

 private:
  ComplexMatrix m_;
};

/// Matrix exponential by scaling and squaring around a diagonal Pade
/// approximant of degree 3, 5, 7, 9 or 13 (Higham 2005 thresholds on the
/// 1-norm). Throws DimensionError for non-square input, DomainError for
/// non-finite entries and OverflowError if the result is not finite.
ComplexMatrix expm(const ComplexMatrix& m);

/// Linear map A o B for anti-linear A, B: M_A conj(M_B).
ComplexMatrix antilinear_compose(const AntiLinearMap& a, const AntiLinearMap& b);

/// Orthonormal basis of the numerical kernel of m. Singular values below
/// tol * sigma_max count as zero; a zero matrix has the full space as kernel.
std::vector<ComplexVector> nullspace(const ComplexMatrix& m, double tol);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix identity(Eigen::Index n);

// [[a, 0], [0, b]]
ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b);
// [[0, top_right], [bottom_left, 0]]
ComplexMatrix block_offdiag(const ComplexMatrix& top_right, const ComplexMatrix& bottom_left);

inline double frobenius(const ComplexMatrix& m) { return m.norm(); }

/// ||a - b||_F / ||b||_F, falling back to the absolute distance when b = 0.
double relative_distance(const ComplexMatrix& a, const ComplexMatrix& b);

void require_square(const ComplexMatrix& m, std::string_view what);
void require_finite(const ComplexMatrix& m, std::string_view what);

}  // namespace spinkin
