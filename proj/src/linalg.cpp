#include "spinkin/linalg.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "spinkin/errors.hpp"

namespace spinkin {

void ToleranceConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(expm_tol > 0.0)) {
    throw DomainError("tolerances must be strictly positive");
  }
}

ToleranceConfig ToleranceConfig::from_env() {
  ToleranceConfig cfg;
  if (const char* env = std::getenv("SPINKIN_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double t = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw DomainError(std::string("SPINKIN_TOL is not a number: ") + env);
    }
    cfg.abs_tol = t;
    cfg.rel_tol = t;
  }
  cfg.validate();
  return cfg;
}

AntiLinearMap::AntiLinearMap(ComplexMatrix linear_part) : m_(std::move(linear_part)) {
  require_square(m_, "anti-linear map");
}

ComplexVector AntiLinearMap::apply(const ComplexVector& psi) const {
  if (psi.size() != m_.cols()) {
    throw DimensionError("anti-linear map applied to vector of wrong length");
  }
  return m_ * psi.conjugate();
}

void require_square(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_finite(const ComplexMatrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw DomainError(std::string(what) + ": non-finite entries");
  }
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b + b * a; }

ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

ComplexMatrix block_offdiag(const ComplexMatrix& top_right, const ComplexMatrix& bottom_left) {
  ComplexMatrix out = ComplexMatrix::Zero(top_right.rows() + bottom_left.rows(),
                                          bottom_left.cols() + top_right.cols());
  out.topRightCorner(top_right.rows(), top_right.cols()) = top_right;
  out.bottomLeftCorner(bottom_left.rows(), bottom_left.cols()) = bottom_left;
  return out;
}

double relative_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double diff = (a - b).norm();
  const double scale = b.norm();
  return scale > 0.0 ? diff / scale : diff;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix antilinear_compose(const AntiLinearMap& a, const AntiLinearMap& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("antilinear_compose: dimension mismatch");
  }
  return a.linear_part() * b.linear_part().conjugate();
}

std::vector<ComplexVector> nullspace(const ComplexMatrix& m, double tol) {
  require_finite(m, "nullspace");
  if (m.cols() == 0) return {};
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  if (smax > 0.0) {
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > tol * smax) ++rank;
    }
  }
  std::vector<ComplexVector> basis;
  const ComplexMatrix& v = svd.matrixV();
  for (Eigen::Index k = rank; k < m.cols(); ++k) basis.emplace_back(v.col(k));
  return basis;
}

namespace {

double one_norm(const ComplexMatrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

// Coefficients b_k of the [m/m] Pade approximant of exp, highest order first
// trimmed to what each degree needs.
constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

template <std::size_t N>
ComplexMatrix pade_low(const ComplexMatrix& a, const std::array<double, N>& b) {
  // Odd part U = A * sum b_{2k+1} A^{2k}, even part V = sum b_{2k} A^{2k}.
  const Eigen::Index n = a.rows();
  const ComplexMatrix a2 = a * a;
  ComplexMatrix power = identity(n);
  ComplexMatrix odd = ComplexMatrix::Zero(n, n);
  ComplexMatrix even = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; 2 * k < N; ++k) {
    even += b[2 * k] * power;
    if (2 * k + 1 < N) odd += b[2 * k + 1] * power;
    power = power * a2;
  }
  const ComplexMatrix u = a * odd;
  return (even - u).partialPivLu().solve(even + u);
}

ComplexMatrix pade13(const ComplexMatrix& a) {
  const auto& b = kPade13;
  const Eigen::Index n = a.rows();
  const ComplexMatrix id = identity(n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix u =
      a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
           b[1] * id);
  const ComplexMatrix v =
      a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m) {
  require_square(m, "expm");
  require_finite(m, "expm");

  const double norm = one_norm(m);
  ComplexMatrix result;
  if (norm <= kTheta3) {
    result = pade_low(m, kPade3);
  } else if (norm <= kTheta5) {
    result = pade_low(m, kPade5);
  } else if (norm <= kTheta7) {
    result = pade_low(m, kPade7);
  } else if (norm <= kTheta9) {
    result = pade_low(m, kPade9);
  } else {
    int squarings = 0;
    if (norm > kTheta13) {
      squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
    }
    result = pade13(m / std::ldexp(1.0, squarings));
    for (int s = 0; s < squarings; ++s) result = result * result;
  }
  if (!result.allFinite()) {
    throw OverflowError("expm: result overflowed");
  }
  return result;
}

}  // namespace spinkin
