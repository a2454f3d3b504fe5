#include <cmath>
#include <numbers>

#include "spinkin/errors.hpp"
#include "spinkin/lorentz_rep.hpp"
#include "test_support.hpp"

using namespace spinkin;
using spinkin::test::check_close;
using spinkin::test::max_abs;

namespace {

constexpr int kEps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                               {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                               {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};

ComplexMatrix eps_sum(const GeneratorTriple& g, int a, int b) {
  ComplexMatrix out = ComplexMatrix::Zero(g[0].rows(), g[0].cols());
  for (int c = 0; c < 3; ++c) out += static_cast<double>(kEps[a][b][c]) * g[static_cast<std::size_t>(c)];
  return out;
}

void check_lorentz_algebra(const Generators& gen) {
  const auto& j = gen.rotation;
  const auto& k = gen.boost;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
      check_close(commutator(j[ua], j[ub]), kI * eps_sum(j, a, b), 1e-13);
      check_close(commutator(j[ua], k[ub]), kI * eps_sum(k, a, b), 1e-13);
      check_close(commutator(k[ua], k[ub]), -kI * eps_sum(j, a, b), 1e-13);
    }
  }
}

}  // namespace

TEST_CASE("HalfInt") {
  CHECK_THROWS_AS(HalfInt(0), DomainError);
  CHECK_THROWS_AS(HalfInt(-3), DomainError);
  const HalfInt j(3);
  CHECK(j.value() == 1.5);
  CHECK(j.multiplicity() == 4);
  CHECK(HalfInt(2) == HalfInt(2));
}

TEST_CASE("spin-1/2 matrices are half the Pauli matrices") {
  const GeneratorTriple s = spin_matrices(HalfInt(1));
  for (std::size_t a = 0; a < 3; ++a) check_close(s[a], 0.5 * spinkin::test::pauli()[a], 0.0);
}

TEST_CASE("spin matrices: su(2) algebra, Casimir, descending J_z") {
  for (int twice = 1; twice <= 6; ++twice) {
    const HalfInt j(twice);
    const GeneratorTriple s = spin_matrices(j);
    const Eigen::Index n = j.multiplicity();
    ComplexMatrix casimir = ComplexMatrix::Zero(n, n);
    for (std::size_t a = 0; a < 3; ++a) {
      check_close(s[a], s[a].adjoint(), 0.0);
      casimir += s[a] * s[a];
    }
    check_close(casimir, j.value() * (j.value() + 1.0) * identity(n), 1e-12);
    check_close(commutator(s[0], s[1]), kI * s[2], 1e-12);
    for (Eigen::Index k = 0; k < n; ++k) CHECK(s[2](k, k).real() == j.value() - static_cast<double>(k));
  }
}

TEST_CASE("(j,0)+(0,j) generators satisfy the Lorentz algebra; eta is the parity matrix") {
  for (int twice = 1; twice <= 4; ++twice) {
    const RepGenerators rep = rep_generators(HalfInt(twice));
    const Eigen::Index n = HalfInt(twice).multiplicity();
    CHECK(rep.dim() == 2 * n);
    check_lorentz_algebra(rep.gen);
    check_close(rep.eta * rep.eta, identity(2 * n), 0.0);
    check_close(rep.eta, block_swap(n), 0.0);
    for (std::size_t a = 0; a < 3; ++a) {
      check_close(rep.gen.rotation[a], rep.gen.rotation[a].adjoint(), 0.0);
      check_close(rep.gen.boost[a], -rep.gen.boost[a].adjoint(), 0.0);
      CHECK(max_abs(anticommutator(rep.eta, rep.gen.boost[a])) == 0.0);
      CHECK(max_abs(commutator(rep.eta, rep.gen.rotation[a])) == 0.0);
    }
    // Explicit blocks: K = diag(-iJ, iJ).
    const GeneratorTriple s = spin_matrices(HalfInt(twice));
    check_close(rep.gen.boost[0], block_diag(-kI * s[0], kI * s[0]), 0.0);
  }
}

TEST_CASE("tensor representation generators") {
  for (int twice = 1; twice <= 3; ++twice) {
    const HalfInt j(twice);
    const TensorRepGenerators t = tensor_rep_generators(j);
    CHECK(t.dim() == j.multiplicity() * j.multiplicity());
    check_lorentz_algebra(t.gen);
  }
}

TEST_CASE("Wigner theta conjugates J to -J*") {
  ComplexMatrix theta_half(2, 2);
  theta_half << 0, -1, 1, 0;
  check_close(wigner_theta(HalfInt(1)), theta_half, 0.0);
  for (int twice = 1; twice <= 6; ++twice) {
    const HalfInt j(twice);
    const ComplexMatrix t = wigner_theta(j);
    const GeneratorTriple s = spin_matrices(j);
    for (std::size_t a = 0; a < 3; ++a) {
      check_close(t * s[a] * t.inverse(), -s[a].conjugate(), 1e-12);
    }
    const double sign = twice % 2 == 0 ? 1.0 : -1.0;
    check_close(t * t, sign * identity(j.multiplicity()), 0.0);
  }
}

TEST_CASE("vector boosts preserve the metric and map rest momenta on shell") {
  const Vec3 phi(0.3, -0.4, 1.2);
  const LorentzTransform b = vector_boost(phi);
  CHECK(b.metric_residual() < 1e-13);
  const double m = 2.5;
  const Eigen::Vector4d p = b.apply(Eigen::Vector4d(m, 0, 0, 0));
  CHECK(p(0) == doctest::Approx(m * std::cosh(phi.norm())).epsilon(1e-14));
  const Vec3 spatial = p.tail<3>();
  CHECK((spatial - m * std::sinh(phi.norm()) * phi.normalized()).norm() < 1e-12);
  CHECK(max_abs(vector_boost(Vec3::Zero()).matrix.cast<Complex>() - identity(4)) == 0.0);
  CHECK_THROWS_AS(vector_boost(Vec3(31.0, 0.0, 0.0)), OverflowError);
}

TEST_CASE("vector rotations are active and right-handed") {
  const LorentzTransform r = vector_rotation(Vec3(0, 0, 0.5 * std::numbers::pi));
  const Eigen::Vector4d y = r.apply(Eigen::Vector4d(1, 1, 0, 0));
  CHECK((y - Eigen::Vector4d(1, 0, 1, 0)).norm() < 1e-15);
  CHECK(r.metric_residual() < 1e-15);
  const LorentzTransform twice = r.then(r);
  CHECK((twice.apply(Eigen::Vector4d(0, 1, 0, 0)) - Eigen::Vector4d(0, -1, 0, 0)).norm() < 1e-15);
}

TEST_CASE("contract and block_swap") {
  const GeneratorTriple s = spin_matrices(HalfInt(1));
  check_close(contract(s, Vec3(1, 2, 3)), s[0] + 2.0 * s[1] + 3.0 * s[2], 0.0);
  ComplexMatrix swap(4, 4);
  swap << 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0;
  check_close(block_swap(2), swap, 0.0);
}
