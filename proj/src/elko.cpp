#include "spinkin/elko.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spinkin/errors.hpp"
#include "spinkin/kinematics.hpp"
#include "spinkin/sampling.hpp"

namespace spinkin {

namespace {

const HalfInt kSpinHalf{1};

ComplexMatrix theta2() { return wigner_theta(kSpinHalf); }

}  // namespace

AntiLinearMap charge_conjugation() {
  const ComplexMatrix t = theta2();
  return AntiLinearMap(block_offdiag(kI * t, -kI * t));
}

ComplexVector elko_spinor(const Spinor2& w, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("elko_spinor: sign must be +-1");
  ComplexVector out(4);
  out << static_cast<double>(sign) * kI * (theta2() * w.conjugate()), w;
  return out;
}

ElkoSpinors elko_basis(const Cx2Basis& basis, double tol) {
  if (std::abs(basis.det()) <= tol * basis.u().norm() * basis.v().norm()) {
    throw DegenerateBasisError("elko_basis: u and v are linearly dependent");
  }
  return {elko_spinor(basis.u(), 1), elko_spinor(basis.u(), -1), elko_spinor(basis.v(), 1),
          elko_spinor(basis.v(), -1)};
}

ComplexMatrix g_operator_numerator(const Cx2Basis& s) {
  const auto cj = [](Complex z) { return std::conj(z); };
  const Complex a = s.a, b = s.b, c = s.c, d = s.d;
  ComplexMatrix top(2, 2), bottom(2, 2);
  top << kI * (b * cj(d) - cj(b) * d), kI * (c * cj(b) - a * cj(d)),
      kI * (d * cj(a) - b * cj(c)), kI * (a * cj(c) - cj(a) * c);
  bottom << kI * (cj(a) * c - a * cj(c)), kI * (c * cj(b) - a * cj(d)),
      kI * (d * cj(a) - b * cj(c)), kI * (cj(b) * d - b * cj(d));
  return block_offdiag(top, bottom);
}

ComplexMatrix g_operator(const Cx2Basis& basis, double tol) {
  const Complex det = basis.det();
  if (std::abs(det) <= tol * basis.u().norm() * basis.v().norm()) {
    throw DegenerateBasisError("g_operator: u and v are linearly dependent");
  }
  ComplexMatrix g = g_operator_numerator(basis);
  g.topRightCorner(2, 2) /= det;
  g.bottomLeftCorner(2, 2) /= std::conj(det);
  return g;
}

SchurResiduals schur_conditions(const Cx2Basis& s) {
  return {std::abs(s.a * std::conj(s.d) - s.c * std::conj(s.b)),
          std::abs(std::imag(s.a * std::conj(s.c)) - std::imag(s.b * std::conj(s.d)))};
}

double rotation_commutant_residual(const ComplexMatrix& op, int rotations, std::uint64_t seed) {
  const double scale = op.norm();
  if (scale == 0.0) return 0.0;
  const RepGenerators rep = rep_generators(kSpinHalf);
  Rng rng(seed);
  double worst = 0.0;
  for (int r = 0; r < rotations; ++r) {
    const ComplexMatrix d = rotation_matrix(rep.gen, sample_ball(rng, 3.141592653589793));
    worst = std::max(worst, commutator(op, d).norm() / scale);
  }
  return worst;
}

NogoWitness nogo_witness(const Cx2Basis& basis, double tol) {
  NogoWitness w;
  const SchurResiduals r = schur_conditions(basis);
  w.r1 = r.r1;
  w.r2 = r.r2;
  w.det_uv = std::abs(basis.det());
  w.det_bound = std::hypot(r.r1, r.r2);
  w.rotation_invariant = r.r1 <= tol && r.r2 <= tol;
  w.is_basis = w.det_uv > tol;
  const double slack = 1e-12 * std::max(1.0, w.det_bound);
  w.consistent = !(w.rotation_invariant && w.is_basis) && w.det_uv <= w.det_bound + slack;
  if (w.rotation_invariant) {
    w.conclusion = w.is_basis ? "contradiction: rotation-invariant G on a basis"
                              : "rotation-invariant conditions hold, u and v are not a basis";
  } else {
    w.conclusion = "u and v violate the rotation-invariance conditions";
  }
  return w;
}

NogoSweep nogo_sweep(int samples, std::uint64_t seed, double min_det, double threshold) {
  if (samples < 1) throw DomainError("nogo_sweep: samples must be >= 1");
  NogoSweep out;
  out.seed = seed;
  out.min_det = min_det;
  out.threshold = threshold;
  out.min_max_r = std::numeric_limits<double>::infinity();
  Rng rng(seed);
  auto draw_unit = [&rng] {
    Spinor2 w(rng.complex_normal(), rng.complex_normal());
    return Spinor2(w / w.norm());
  };
  while (out.accepted < samples) {
    const Cx2Basis basis = Cx2Basis::from(draw_unit(), draw_unit());
    ++out.drawn;
    if (std::abs(basis.det()) < min_det) continue;
    ++out.accepted;
    const SchurResiduals r = schur_conditions(basis);
    out.min_max_r = std::min(out.min_max_r, std::max(r.r1, r.r2));
  }
  out.pass = out.min_max_r > threshold;
  return out;
}

AntilinearSolutions antilinear_kinematic_solutions(const RepGenerators& rep, double tol) {
  if (rep.j.twice() != 1) {
    throw DomainError("antilinear_kinematic_solutions: only spin 1/2 is supported");
  }
  const Eigen::Index d = rep.dim();
  const ComplexMatrix id = identity(d);
  // Column-major vec: vec(M X) = (X^T (x) 1) vec M, vec(Y M) = (1 (x) Y) vec M.
  ComplexMatrix system(3 * d * d, d * d);
  for (int a = 0; a < 3; ++a) {
    const ComplexMatrix ik = kI * rep.gen.boost[static_cast<std::size_t>(a)];
    system.middleRows(a * d * d, d * d) = kron(ik.conjugate().transpose(), id) + kron(id, ik);
  }
  AntilinearSolutions out;
  const std::vector<ComplexVector> kernel = nullspace(system, tol);
  out.dimension = static_cast<int>(kernel.size());
  ComplexMatrix q(d * d, out.dimension);
  for (int k = 0; k < out.dimension; ++k) {
    q.col(k) = kernel[static_cast<std::size_t>(k)];
    out.basis.emplace_back(Eigen::Map<const ComplexMatrix>(kernel[static_cast<std::size_t>(k)].data(), d, d));
  }
  const ComplexMatrix t = theta2();
  const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  for (const ComplexMatrix& expected : {block_diag(t, zero), block_diag(zero, t)}) {
    const Eigen::Map<const ComplexVector> e(expected.data(), d * d);
    const ComplexVector residual = e - q * (q.adjoint() * e);
    out.span_residual = std::max(out.span_residual, residual.norm() / e.norm());
  }
  out.matches_theta_span = out.dimension == 2 && out.span_residual <= 1e-10;
  return out;
}

std::pair<Spinor2, Spinor2> helicity_basis(const Vec3& direction) {
  const double r = direction.norm();
  if (!(r > 0.0)) throw DomainError("helicity_basis: direction must be non-zero");
  const Vec3 n = direction / r;
  const double t = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const double phi = std::atan2(n.y(), n.x());
  const Complex phase = std::polar(1.0, phi);
  const double c = std::cos(0.5 * t);
  const double s = std::sin(0.5 * t);
  return {Spinor2(c, phase * s), Spinor2(-std::conj(phase) * s, c)};
}

namespace {

ComplexMatrix helicity_g(const Vec3& direction) {
  const auto [u, v] = helicity_basis(direction);
  return g_operator(Cx2Basis::from(u, v));
}

}  // namespace

ComplexMatrix elko_g_at_momentum(const FourMomentum& q) {
  if (q.momentum().isZero(0.0)) {
    throw DomainError("elko_g_at_momentum: helicity is undefined at rest");
  }
  const RepGenerators rep = rep_generators(kSpinHalf);
  const Vec3 phi = rapidity_from_momentum(q);
  return boost_matrix(rep.gen, phi) * helicity_g(q.momentum()) * boost_matrix(rep.gen, -phi);
}

OriginReport helicity_origin_discontinuity(double m) {
  if (!(m > 0.0)) throw DomainError("helicity_origin_discontinuity: mass must be positive");
  const RepGenerators rep = rep_generators(kSpinHalf);
  OriginReport out;
  out.m = m;
  out.eps = {1e-3, 1e-6};
  out.labels = {"+z", "+x", "+y", "-z"};
  out.directions = {Vec3::UnitZ(), Vec3::UnitX(), Vec3::UnitY(), -Vec3::UnitZ()};

  std::vector<ComplexMatrix> smallest;  // G(eps_min n) per direction
  for (const Vec3& n : out.directions) {
    std::vector<ComplexMatrix> values;
    ComplexMatrix raw;
    for (double eps : out.eps) {
      const FourMomentum q(m, eps * n);
      const Vec3 phi = rapidity_from_momentum(q);
      raw = elko_g_at_momentum(q);
      values.push_back(boost_matrix(rep.gen, -phi) * raw * boost_matrix(rep.gen, phi));
    }
    out.cauchy.push_back((values.front() - values.back()).norm());
    out.limits.push_back(values.back());
    smallest.push_back(raw);
  }
  for (const auto& g : smallest) out.distance_from_z.push_back((g - smallest.front()).norm());
  out.max_distance = *std::max_element(out.distance_from_z.begin(), out.distance_from_z.end());
  out.max_cauchy = *std::max_element(out.cauchy.begin(), out.cauchy.end());
  out.discontinuous = out.max_distance > 0.1 && out.max_cauchy <= 1e-6;
  return out;
}

}  // namespace spinkin
