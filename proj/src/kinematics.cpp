#include "spinkin/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinkin/errors.hpp"
#include "spinkin/sampling.hpp"

namespace spinkin {

FourMomentum::FourMomentum(double mass, const Vec3& momentum) : m_(mass), p_(momentum) {
  if (!std::isfinite(mass) || !(mass > 0.0)) {
    throw DomainError("mass must be positive and finite");
  }
  if (!momentum.allFinite()) throw DomainError("momentum must be finite");
  e_ = std::hypot(m_, p_.norm());
}

Eigen::Vector4d FourMomentum::contravariant() const { return {e_, p_.x(), p_.y(), p_.z()}; }

Eigen::Vector4d FourMomentum::covariant() const { return {e_, -p_.x(), -p_.y(), -p_.z()}; }

Vec3 rapidity_from_momentum(const FourMomentum& q) {
  const double p = q.momentum().norm();
  if (p == 0.0) return Vec3::Zero();
  const double phi = std::asinh(p / q.mass());
  if (phi > kMaxRapidity) {
    throw OverflowError("rapidity " + std::to_string(phi) + " exceeds cap");
  }
  return (phi / p) * q.momentum();
}

namespace {

ComplexMatrix exp_boost_unchecked(const Generators& gen, const Vec3& phi) {
  return expm(kI * contract(gen.boost, phi));
}

}  // namespace

ComplexMatrix boost_matrix(const Generators& gen, const Vec3& phi) {
  if (!phi.allFinite()) throw DomainError("boost_matrix: non-finite rapidity");
  if (phi.norm() > kMaxRapidity) throw OverflowError("boost_matrix: rapidity exceeds cap");
  return exp_boost_unchecked(gen, phi);
}

ComplexMatrix rotation_matrix(const Generators& gen, const Vec3& theta) {
  if (!theta.allFinite()) throw DomainError("rotation_matrix: non-finite angle");
  return expm(-kI * contract(gen.rotation, theta));
}

ComplexMatrix parity_operator(const RepGenerators& rep, const FourMomentum& q) {
  const Vec3 phi = rapidity_from_momentum(q);
  return exp_boost_unchecked(rep.gen, 2.0 * phi) * rep.eta;
}

ComplexMatrix parity_operator_conjugated(const RepGenerators& rep, const FourMomentum& q) {
  const Vec3 phi = rapidity_from_momentum(q);
  return boost_matrix(rep.gen, phi) * rep.eta * boost_matrix(rep.gen, -phi);
}

ComplexMatrix KinematicOperatorFamily::at(const FourMomentum& q) const {
  const Vec3 phi = rapidity_from_momentum(q);
  if (phi.isZero(0.0)) return rest_matrix;
  return conjugate_by(boost_matrix(gen, phi), rest_matrix);
}

ComplexMatrix KinematicOperatorFamily::square(const ComplexMatrix& a) const {
  return antilinear ? ComplexMatrix(a * a.conjugate()) : ComplexMatrix(a * a);
}

ComplexMatrix KinematicOperatorFamily::conjugate_by(const ComplexMatrix& d,
                                                    const ComplexMatrix& a) const {
  const ComplexMatrix d_inv = d.partialPivLu().inverse();
  return antilinear ? ComplexMatrix(d * a * d_inv.conjugate()) : ComplexMatrix(d * a * d_inv);
}

double KinematicOperatorFamily::anticommutator_residual() const {
  double worst = 0.0;
  for (const auto& k : gen.boost) {
    const ComplexMatrix ik = kI * k;
    // Anti-linear: A(iK psi) = M conj(iK) conj(psi).
    const ComplexMatrix lhs = antilinear ? ComplexMatrix(rest_matrix * ik.conjugate())
                                         : ComplexMatrix(rest_matrix * ik);
    worst = std::max(worst, (lhs + ik * rest_matrix).norm());
  }
  return worst;
}

KinematicOperatorFamily KinematicOperatorFamily::parity(const RepGenerators& rep) {
  return {rep.gen, rep.eta, false};
}

KinematicOperatorFamily KinematicOperatorFamily::scaled_swap(const RepGenerators& rep, Complex a) {
  if (a == Complex(0.0)) throw DomainError("scaled_swap: a must be non-zero");
  const Eigen::Index n = rep.j.multiplicity();
  return {rep.gen, block_offdiag(a * identity(n), identity(n) / a), false};
}

KinematicOperatorFamily KinematicOperatorFamily::antilinear_theta(const RepGenerators& rep,
                                                                  Complex a, Complex b) {
  const ComplexMatrix theta = wigner_theta(rep.j);
  return {rep.gen, block_diag(a * theta, b * theta), true};
}

double covariance_residual(const KinematicOperatorFamily& fam, const FourMomentum& q,
                           const LorentzTransform& lambda, const ComplexMatrix& d) {
  const Eigen::Vector4d moved = lambda.apply(q.contravariant());
  const FourMomentum q2(q.mass(), moved.tail<3>());
  const double shell_scale = std::max(1.0, moved(0) * moved(0));
  if (!(moved(0) > 0.0) ||
      std::abs(moved(0) * moved(0) - q2.energy() * q2.energy()) > 1e-9 * shell_scale) {
    throw OffShellError("covariance_residual: transformed momentum is off shell");
  }
  const ComplexMatrix a = fam.at(q);
  const ComplexMatrix lhs = fam.at(q2);
  const ComplexMatrix rhs = fam.conjugate_by(d, a);
  return (lhs - rhs).norm() / a.norm();
}

KinematicReport is_fully_kinematic(const KinematicOperatorFamily& fam, int samples, double tol,
                                   std::uint64_t seed) {
  if (samples < 1) throw DomainError("is_fully_kinematic: samples must be >= 1");
  KinematicReport report;
  report.seed = seed;
  report.samples = samples;
  report.tol = tol;
  report.max_anticommutator_residual = fam.anticommutator_residual();

  const Eigen::Index dim = fam.rest_matrix.rows();
  const ComplexMatrix id = identity(dim);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const FourMomentum q = sample_momentum(rng);
    const Vec3 phi = sample_ball(rng, 1.0);
    const Vec3 theta = sample_ball(rng, 3.141592653589793);

    const ComplexMatrix a = fam.at(q);
    report.max_square_residual =
        std::max(report.max_square_residual, (fam.square(a) - id).norm());

    const double boost_res =
        covariance_residual(fam, q, vector_boost(phi), boost_matrix(fam.gen, phi));
    const double rot_res =
        covariance_residual(fam, q, vector_rotation(theta), rotation_matrix(fam.gen, theta));
    report.max_covariance_residual =
        std::max({report.max_covariance_residual, boost_res, rot_res});
  }
  report.squares_to_identity = report.max_square_residual <= tol;
  report.anticommutes = report.max_anticommutator_residual <= tol;
  report.covariant = report.max_covariance_residual <= tol;
  return report;
}

}  // namespace spinkin
