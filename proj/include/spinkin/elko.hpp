#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinkin/linalg.hpp"
#include "spinkin/lorentz_rep.hpp"
#include "spinkin/momentum.hpp"

namespace spinkin {

using Spinor2 = Eigen::Vector2cd;

/// Pair u = (a, b), v = (c, d) in C^2.
struct Cx2Basis {
  Complex a, b, c, d;

  static Cx2Basis from(const Spinor2& u, const Spinor2& v) { return {u(0), u(1), v(0), v(1)}; }

  Spinor2 u() const { return {a, b}; }
  Spinor2 v() const { return {c, d}; }
  /// det [u v] = ad - bc.
  Complex det() const { return a * d - b * c; }
};

/// C = [[0, i T], [-i T, 0]] o conj, T = [[0, -1], [1, 0]].
AntiLinearMap charge_conjugation();

/// (sign i T conj(w), w): the C-eigenspinor with eigenvalue `sign` built on w.
ComplexVector elko_spinor(const Spinor2& w, int sign);

struct ElkoSpinors {
  ComplexVector u_plus, u_minus, v_plus, v_minus;
};

/// Throws DegenerateBasisError when |det[u v]| <= tol |u| |v|.
ElkoSpinors elko_basis(const Cx2Basis& basis, double tol = 1e-10);

/// The linear operator equal to +1 on u~+, v~+ and -1 on u~-, v~-, in
/// closed form. Throws DegenerateBasisError for a degenerate basis.
ComplexMatrix g_operator(const Cx2Basis& basis, double tol = 1e-10);

/// g_operator with the top-right block multiplied by det[u v] and the
/// bottom-left block by its conjugate; polynomial in (a, b, c, d), so it is
/// defined for every basis and commutes with rotations exactly when G does.
ComplexMatrix g_operator_numerator(const Cx2Basis& basis);

struct SchurResiduals {
  double r1 = 0.0;  // |a conj(d) - c conj(b)|
  double r2 = 0.0;  // |Im(a conj(c)) - Im(b conj(d))|
};

SchurResiduals schur_conditions(const Cx2Basis& basis);

/// max over `rotations` random rotations R of ||[op, D(R)]||_F / ||op||_F,
/// D(R) the spin-1/2 (1/2,0)+(0,1/2) rotation. Zero for a zero operator.
double rotation_commutant_residual(const ComplexMatrix& op, int rotations = 20,
                                   std::uint64_t seed = 7);

struct NogoWitness {
  double r1 = 0.0;
  double r2 = 0.0;
  double det_uv = 0.0;     // |det[u v]|
  double det_bound = 0.0;  // sqrt(r1^2 + r2^2) >= |det[u v]|
  bool rotation_invariant = false;  // r1, r2 <= tol
  bool is_basis = false;            // |det[u v]| > tol
  bool consistent = false;  // never both, and the bound holds
  std::string conclusion;
};

NogoWitness nogo_witness(const Cx2Basis& basis, double tol = 1e-10);

struct NogoSweep {
  std::uint64_t seed = 0;
  int accepted = 0;  // bases with |det| >= min_det
  int drawn = 0;
  double min_det = 0.0;
  double threshold = 0.0;
  double min_max_r = 0.0;  // min over accepted of max(r1, r2)
  bool pass = false;       // min_max_r > threshold
};

/// Draws unit-norm random (u, v) until `samples` of them have
/// |det[u v]| >= min_det and records the smallest max(r1, r2).
NogoSweep nogo_sweep(int samples, std::uint64_t seed, double min_det = 0.1,
                     double threshold = 0.01);

struct AntilinearSolutions {
  std::vector<ComplexMatrix> basis;  // linear parts M of solutions M o conj
  int dimension = 0;                 // complex dimension
  double span_residual = 0.0;  // distance of diag(T,0), diag(0,T) from the span
  bool matches_theta_span = false;
};

/// Kernel of M -> {M o conj, iK_a} (a = 1, 2, 3) over 4x4 M, spin 1/2 only.
AntilinearSolutions antilinear_kinematic_solutions(const RepGenerators& rep, double tol = 1e-10);

/// Helicity eigenvectors of sigma.n: u = (cos t/2, e^{i phi} sin t/2)
/// (+1) and v = (-e^{-i phi} sin t/2, cos t/2) (-1), (t, phi) the polar
/// angles of n. Throws DomainError for n = 0.
std::pair<Spinor2, Spinor2> helicity_basis(const Vec3& direction);

/// Elko operator at momentum q: B(phi) G(u(p^), v(p^)) B(phi)^-1 with
/// helicity u, v along p^. Throws DomainError at rest.
ComplexMatrix elko_g_at_momentum(const FourMomentum& q);

struct OriginReport {
  double m = 0.0;
  std::vector<double> eps;  // radii probed along each ray, decreasing
  std::vector<std::string> labels;
  std::vector<Vec3> directions;
  /// Rest-frame value B^-1 G(eps n) B at the smallest eps, per direction.
  std::vector<ComplexMatrix> limits;
  /// ||value(eps_first) - value(eps_last)||_F, per direction.
  std::vector<double> cauchy;
  /// ||G(eps n) - G(eps z)||_F at the smallest eps, per direction.
  std::vector<double> distance_from_z;
  double max_distance = 0.0;
  double max_cauchy = 0.0;
  bool discontinuous = false;  // max_distance > 0.1 and max_cauchy <= 1e-6
};

/// Probes G along +z, +x, +y and -z at eps = 1e-3 and 1e-6.
OriginReport helicity_origin_discontinuity(double m);

}  // namespace spinkin
