#include <cmath>

#include "spinkin/elko.hpp"
#include "spinkin/errors.hpp"
#include "spinkin/kinematics.hpp"
#include "spinkin/sampling.hpp"
#include "test_support.hpp"

using namespace spinkin;
using spinkin::test::check_close;
using spinkin::test::max_abs;

namespace {

Spinor2 random_spinor(Rng& rng) { return {rng.complex_normal(), rng.complex_normal()}; }

// The operator diagonal (1, 1, -1, -1) on (u~+, v~+, u~-, v~-), built from
// its eigenbasis: the definition the closed form must agree with.
ComplexMatrix g_from_eigenbasis(const Cx2Basis& b) {
  const ElkoSpinors e = elko_basis(b);
  ComplexMatrix w(4, 4);
  w << e.u_plus, e.v_plus, e.u_minus, e.v_minus;
  ComplexMatrix s = ComplexMatrix::Zero(4, 4);
  s.diagonal() << 1, 1, -1, -1;
  return w * s * w.inverse();
}

ComplexMatrix expected_e1_e2() {
  ComplexMatrix g = ComplexMatrix::Zero(4, 4);
  g(0, 3) = Complex(0, -1);
  g(1, 2) = Complex(0, 1);
  g(2, 1) = Complex(0, -1);
  g(3, 0) = Complex(0, 1);
  return g;
}

}  // namespace

TEST_CASE("charge conjugation is an anti-linear involution") {
  const AntiLinearMap c = charge_conjugation();
  check_close(antilinear_compose(c, c), identity(4), 0.0);
  ComplexVector psi(4);
  psi << Complex(1, -1), 2, Complex(0, 3), Complex(-1, 0.5);
  CHECK((c(kI * psi) + kI * c(psi)).norm() < 1e-15);
  // Boosts commute with C: B M conj(B^-1) = M.
  const RepGenerators rep = rep_generators(HalfInt(1));
  const Vec3 phi(0.3, -0.8, 0.5);
  const ComplexMatrix b = boost_matrix(rep.gen, phi);
  check_close(b * c.linear_part() * boost_matrix(rep.gen, -phi).conjugate(), c.linear_part(), 1e-14);
}

TEST_CASE("Elko spinors are C eigenvectors") {
  ComplexVector expected(4);
  expected << 0, Complex(0, 1), 1, 0;
  CHECK((elko_spinor(Spinor2(1, 0), 1) - expected).norm() == 0.0);

  const AntiLinearMap c = charge_conjugation();
  Rng rng(51);
  for (int k = 0; k < 20; ++k) {
    const Spinor2 w = random_spinor(rng);
    const ComplexVector plus = elko_spinor(w, 1);
    const ComplexVector minus = elko_spinor(w, -1);
    CHECK((c(plus) - plus).norm() < 1e-14 * plus.norm());
    CHECK((c(minus) + minus).norm() < 1e-14 * minus.norm());
  }
  // u -> u~ is not linear: u~(i u) differs from i u~(u).
  const Spinor2 u(1, Complex(0, 2));
  CHECK((elko_spinor(Complex(0, 1) * u, 1) - kI * elko_spinor(u, 1)).norm() > 1.0);
  CHECK_THROWS_AS(elko_spinor(u, 0), DomainError);
}

TEST_CASE("G for u = e1, v = e2") {
  const ComplexMatrix g = g_operator(Cx2Basis::from(Spinor2(1, 0), Spinor2(0, 1)));
  CHECK(max_abs(g - expected_e1_e2()) <= 1e-14);
  check_close(g_from_eigenbasis(Cx2Basis::from(Spinor2(1, 0), Spinor2(0, 1))), expected_e1_e2(),
              1e-15);
}

TEST_CASE("closed-form G agrees with the eigenbasis definition") {
  Rng rng(52);
  int tested = 0;
  while (tested < 100) {
    const Cx2Basis b = Cx2Basis::from(random_spinor(rng), random_spinor(rng));
    if (std::abs(b.det()) < 0.1) continue;
    ++tested;
    const ComplexMatrix g = g_operator(b);
    check_close(g, g_from_eigenbasis(b), 1e-11 * g.norm());
    CHECK(max_abs(g * g - identity(4)) <= 1e-10);
    const ElkoSpinors e = elko_basis(b);
    CHECK((g * e.u_plus - e.u_plus).norm() <= 1e-10 * e.u_plus.norm());
    CHECK((g * e.v_plus - e.v_plus).norm() <= 1e-10 * e.v_plus.norm());
    CHECK((g * e.u_minus + e.u_minus).norm() <= 1e-10 * e.u_minus.norm());
    CHECK((g * e.v_minus + e.v_minus).norm() <= 1e-10 * e.v_minus.norm());
    // The numerator is G with det / conj(det) restored.
    const ComplexMatrix n = g_operator_numerator(b);
    check_close(n.topRightCorner(2, 2), b.det() * g.topRightCorner(2, 2), 1e-12);
    check_close(n.bottomLeftCorner(2, 2), std::conj(b.det()) * g.bottomLeftCorner(2, 2), 1e-12);
  }
  CHECK_THROWS_AS(g_operator(Cx2Basis::from(Spinor2(1, 2), Spinor2(2, 4))), DegenerateBasisError);
  CHECK_THROWS_AS(elko_basis(Cx2Basis::from(Spinor2(1, 0), Spinor2(0, 0))), DegenerateBasisError);
}

TEST_CASE("Schur conditions") {
  const SchurResiduals e = schur_conditions(Cx2Basis::from(Spinor2(1, 0), Spinor2(0, 1)));
  CHECK(e.r1 == 1.0);
  CHECK(e.r2 == 0.0);
  // a = lambda conj(b), c = lambda conj(d) with lambda = 1, b = 1, d = i.
  const Cx2Basis b = Cx2Basis::from(Spinor2(1, 1), Spinor2(Complex(0, -1), Complex(0, 1)));
  const SchurResiduals s = schur_conditions(b);
  CHECK(s.r1 == 0.0);
  CHECK(s.r2 == doctest::Approx(2.0));
  CHECK(b.det() == Complex(0, 2));
}

TEST_CASE("det bound and the rotation commutant") {
  Rng rng(53);
  for (int k = 0; k < 200; ++k) {
    const Cx2Basis b = Cx2Basis::from(random_spinor(rng), random_spinor(rng));
    const SchurResiduals s = schur_conditions(b);
    // |ad - bc|^2 = |a d* - c b*|^2 - 4 Im(a c*) Im(b d*)
    const double lhs = std::norm(b.det());
    const double rhs = s.r1 * s.r1 - 4.0 * std::imag(b.a * std::conj(b.c)) * std::imag(b.b * std::conj(b.d));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + lhs));
    CHECK(std::abs(b.det()) <= std::hypot(s.r1, s.r2) * (1.0 + 1e-12));
    if (std::abs(b.det()) > 0.1) CHECK(rotation_commutant_residual(g_operator(b)) > 1e-3);
  }
  // A rotation-invariant operator: the identity and eta both commute with D(R).
  CHECK(rotation_commutant_residual(identity(4)) <= 1e-15);
  CHECK(rotation_commutant_residual(rep_generators(HalfInt(1)).eta) <= 1e-15);
  CHECK(rotation_commutant_residual(ComplexMatrix::Zero(4, 4)) == 0.0);
  // Real multiples satisfy both conditions, G's numerator vanishes.
  const Spinor2 u(Complex(0.3, 1.1), Complex(-0.7, 0.2));
  const Cx2Basis par = Cx2Basis::from(u, -2.5 * u);
  const SchurResiduals p = schur_conditions(par);
  CHECK(std::max(p.r1, p.r2) <= 1e-15);
  CHECK(max_abs(g_operator_numerator(par)) <= 1e-15);
}

TEST_CASE("no-go witness") {
  const NogoWitness w = nogo_witness(Cx2Basis::from(Spinor2(1, 1), Spinor2(Complex(0, -1), Complex(0, 1))));
  CHECK(w.r1 == 0.0);
  CHECK(w.r2 == doctest::Approx(2.0));
  CHECK(w.det_uv == doctest::Approx(2.0));
  CHECK(w.is_basis);
  CHECK_FALSE(w.rotation_invariant);
  CHECK(w.consistent);

  const Spinor2 u(1.0, Complex(0, 1));
  const NogoWitness par = nogo_witness(Cx2Basis::from(u, 3.0 * u));
  CHECK(par.rotation_invariant);
  CHECK_FALSE(par.is_basis);
  CHECK(par.consistent);
}

TEST_CASE("no-go sweep") {
  const NogoSweep s = nogo_sweep(2000, 42);
  CHECK(s.accepted == 2000);
  CHECK(s.drawn >= 2000);
  CHECK(s.pass);
  CHECK(s.min_max_r > 0.01);
  const NogoSweep again = nogo_sweep(2000, 42);
  CHECK(again.min_max_r == s.min_max_r);
  CHECK_THROWS_AS(nogo_sweep(0, 1), DomainError);
}

TEST_CASE("anti-linear kinematic solutions span diag(a T, b T)") {
  const AntilinearSolutions sol = antilinear_kinematic_solutions(rep_generators(HalfInt(1)));
  CHECK(sol.dimension == 2);
  CHECK(sol.span_residual <= 1e-10);
  CHECK(sol.matches_theta_span);
  // Each returned solution anticommutes with iK as an anti-linear map and
  // squares to a negative multiple of the identity on each block.
  const RepGenerators rep = rep_generators(HalfInt(1));
  for (const auto& m : sol.basis) {
    for (const auto& k : rep.gen.boost) {
      const ComplexMatrix ik = kI * k;
      CHECK(max_abs(m * ik.conjugate() + ik * m) <= 1e-12);
    }
    const ComplexMatrix sq = m * m.conjugate();
    CHECK(max_abs(sq - ComplexMatrix(sq.diagonal().asDiagonal())) <= 1e-12);
    for (int i = 0; i < 4; ++i) CHECK(sq(i, i).real() <= 1e-12);
  }
  // A^2 for a = b = 1.
  const ComplexMatrix t = wigner_theta(HalfInt(1));
  const ComplexMatrix a = block_diag(t, t);
  check_close(a * a.conjugate(), -identity(4), 0.0);
  CHECK_THROWS_AS(antilinear_kinematic_solutions(rep_generators(HalfInt(2))), DomainError);
}

TEST_CASE("helicity basis") {
  const auto& s = spinkin::test::pauli();
  Rng rng(54);
  for (int k = 0; k < 20; ++k) {
    const Vec3 n = rng.unit_vector();
    const auto [u, v] = helicity_basis(3.0 * n);
    const ComplexMatrix sn = n.x() * s[0] + n.y() * s[1] + n.z() * s[2];
    CHECK((sn * u - u).norm() < 1e-14);
    CHECK((sn * v + v).norm() < 1e-14);
    CHECK(std::abs(u.norm() - 1.0) < 1e-15);
    CHECK(std::abs(u.dot(v)) < 1e-15);
  }
  const auto [uz, vz] = helicity_basis(Vec3::UnitZ());
  CHECK((uz - Spinor2(1, 0)).norm() == 0.0);
  CHECK((vz - Spinor2(0, 1)).norm() == 0.0);
  CHECK_THROWS_AS(helicity_basis(Vec3::Zero()), DomainError);
}

TEST_CASE("G at momentum is the boosted helicity G") {
  const FourMomentum q(1.0, Vec3(0.2, 0.4, -0.1));
  const ComplexMatrix g = elko_g_at_momentum(q);
  CHECK(max_abs(g * g - identity(4)) <= 1e-12);
  CHECK_THROWS_AS(elko_g_at_momentum(FourMomentum::at_rest(1.0)), DomainError);
}

TEST_CASE("directional limits of G at the origin") {
  const OriginReport r = helicity_origin_discontinuity(1.0);
  REQUIRE(r.labels.size() == 4);
  CHECK(r.labels[0] == "+z");
  CHECK(r.max_cauchy <= 1e-6);
  for (double c : r.cauchy) CHECK(c <= 1e-6);
  // The rest-frame limit along z is G(e1, e2).
  check_close(r.limits[0], expected_e1_e2(), 1e-12);
  // With helicity vectors real on the x axis, G along x and along -z
  // coincides with G along z; y gives a different limit.
  CHECK(r.distance_from_z[1] <= 1e-12);
  CHECK(r.distance_from_z[3] <= 1e-12);
  CHECK(r.distance_from_z[2] == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-6));
  CHECK(r.max_distance > 0.1);
  CHECK(r.discontinuous);
  CHECK_THROWS_AS(helicity_origin_discontinuity(0.0), DomainError);
}
