#include "spinkin/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spinkin/decomposition.hpp"
#include "spinkin/dirac.hpp"
#include "spinkin/elko.hpp"
#include "spinkin/higher_spin.hpp"
#include "spinkin/kinematics.hpp"
#include "spinkin/sampling.hpp"

namespace spinkin {

bool CheckItem::pass() const {
  switch (bound) {
    case Bound::AtMost:
      return value <= threshold;
    case Bound::AtLeast:
      return value >= threshold;
    case Bound::Above:
      return value > threshold;
  }
  return false;
}

void CheckReport::at_most(std::string name, double value, double threshold) {
  items.push_back({std::move(name), value, std::max(threshold, tol_floor), CheckItem::Bound::AtMost});
}

void CheckReport::at_least(std::string name, double value, double threshold) {
  items.push_back({std::move(name), value, threshold, CheckItem::Bound::AtLeast});
}

void CheckReport::above(std::string name, double value, double threshold) {
  items.push_back({std::move(name), value, threshold, CheckItem::Bound::Above});
}

void CheckReport::note(std::string name, double value) { info.emplace_back(std::move(name), value); }

bool CheckReport::pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass(); });
}

std::vector<std::string> CheckReport::failures() const {
  std::vector<std::string> out;
  for (const auto& i : items) {
    if (!i.pass()) out.push_back(i.name);
  }
  return out;
}

Json to_json(const CheckReport& report) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = report.command;
  out["seed"] = report.seed;
  if (report.samples > 0) {
    out["samples"] = report.samples;
  } else {
    out["samples"] = nullptr;
  }
  Json upper = Json::object(), lower = Json::object(), thresholds = Json::object();
  for (const auto& i : report.items) {
    (i.bound == CheckItem::Bound::AtMost ? upper : lower)[i.name] = i.value;
    thresholds[i.name] = i.threshold;
  }
  out["max_residuals"] = std::move(upper);
  out["lower_bounds"] = std::move(lower);
  out["thresholds"] = std::move(thresholds);
  Json info = Json::object();
  for (const auto& [name, value] : report.info) info[name] = value;
  out["info"] = std::move(info);
  out["failed"] = report.failures();
  out["pass"] = report.pass();
  if (report.runtime_ms) out["runtime_ms"] = *report.runtime_ms;
  return out;
}

namespace {

std::string spin_label(int twice) {
  return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

// Unit-norm (u, v) with |det[u v]| >= min_det.
Cx2Basis random_basis(Rng& rng, double min_det) {
  while (true) {
    Spinor2 u(rng.complex_normal(), rng.complex_normal());
    Spinor2 v(rng.complex_normal(), rng.complex_normal());
    const Cx2Basis b = Cx2Basis::from(u / u.norm(), v / v.norm());
    if (std::abs(b.det()) >= min_det) return b;
  }
}

// v solving the two rotation-invariance conditions for a given u. Both are
// real-linear in (Re c, Im c, Re d, Im d), three real equations in all.
Spinor2 invariant_partner(const Spinor2& u, Rng& rng) {
  auto residual = [&u](const Eigen::Vector4d& x) {
    const Cx2Basis s{u(0), u(1), Complex(x(0), x(1)), Complex(x(2), x(3))};
    const Complex z = s.a * std::conj(s.d) - s.c * std::conj(s.b);
    return Eigen::Vector3d(z.real(), z.imag(),
                           std::imag(s.a * std::conj(s.c)) - std::imag(s.b * std::conj(s.d)));
  };
  Eigen::Matrix<double, 3, 4> a;
  for (int k = 0; k < 4; ++k) a.col(k) = residual(Eigen::Vector4d::Unit(k));
  const Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const int rank = static_cast<int>((sv.array() > 1e-12 * sv(0)).count());
  Eigen::Vector4d x = Eigen::Vector4d::Zero();
  for (int k = rank; k < 4; ++k) x += rng.normal() * svd.matrixV().col(k);
  return {Complex(x(0), x(1)), Complex(x(2), x(3))};
}

double numerator_commutant(const Cx2Basis& b) {
  const ComplexMatrix n = g_operator_numerator(b);
  return rotation_commutant_residual(n) * n.norm();
}

}  // namespace

CheckReport check_kinematic(HalfInt j, int samples, double tol, std::uint64_t seed) {
  CheckReport r;
  r.command = "check kinematic";
  r.seed = seed;
  r.samples = samples;
  const KinematicReport k =
      is_fully_kinematic(KinematicOperatorFamily::parity(rep_generators(j)), samples, tol, seed);
  r.note("spin", j.value());
  r.at_most("square", k.max_square_residual, tol);
  r.at_most("anticommutator", k.max_anticommutator_residual, tol);
  r.at_most("covariance", k.max_covariance_residual, tol);
  return r;
}

void check_dirac_identification(CheckReport& r, int samples) {
  Rng rng(r.seed);
  const RepGenerators rep = rep_generators(HalfInt(1));
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const FourMomentum q = sample_momentum(rng);
    worst = std::max(worst,
                     relative_distance(q.mass() * parity_operator(rep, q), dirac_operator(q)));
  }
  r.at_most("dirac.parity_identification", worst, 1e-10);
}

void check_involution(CheckReport& r, int samples) {
  for (int twice = 1; twice <= 4; ++twice) {
    const HalfInt j(twice);
    const RepGenerators rep = rep_generators(j);
    Rng rng(r.seed);
    double square = 0.0, deviation = 0.0, det_spread = 0.0;
    int bad_multiplicity = 0;
    Complex det0;
    for (int s = 0; s < samples; ++s) {
      const FourMomentum q = sample_momentum(rng);
      const ComplexMatrix p = parity_operator(rep, q);
      square = std::max(square, (p * p - identity(rep.dim())).norm());
      const ParitySpectrum spec = parity_spectrum(j, q, 1e-7);
      deviation = std::max(deviation, spec.max_deviation);
      if (spec.plus_count != j.multiplicity() || spec.minus_count != j.multiplicity()) {
        ++bad_multiplicity;
      }
      if (s == 0) det0 = spec.det;
      det_spread = std::max(det_spread, std::abs(spec.det - det0));
    }
    const std::string tag = "higher_spin.j=" + spin_label(twice);
    r.at_most(tag + ".square", square, 1e-7);
    r.at_most(tag + ".eigenvalue_deviation", deviation, 1e-7);
    r.at_most(tag + ".multiplicity_mismatches", bad_multiplicity, 0.0);
    r.at_most(tag + ".det_spread", det_spread, 1e-7);
    r.note(tag + ".det", det0.real());
  }
}

void check_field_equation(CheckReport& r, int samples) {
  for (int twice = 1; twice <= 4; ++twice) {
    const HalfInt j(twice);
    Rng rng(r.seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      const FourMomentum q = sample_momentum(rng);
      const SpinorBasis b = boosted_spinors(j, q);
      for (const auto& u : b.u) worst = std::max(worst, field_equation_residual(j, u, q, 1));
      for (const auto& v : b.v) worst = std::max(worst, field_equation_residual(j, v, q, -1));
    }
    r.at_most("higher_spin.j=" + spin_label(twice) + ".field_equation", worst, 1e-9);
  }
}

void check_covariance(CheckReport& r, int samples) {
  for (int twice = 1; twice <= 3; ++twice) {
    const auto fam = KinematicOperatorFamily::parity(rep_generators(HalfInt(twice)));
    const KinematicReport k = is_fully_kinematic(fam, samples, 1e-8, r.seed);
    r.at_most("kinematics.j=" + spin_label(twice) + ".covariance", k.max_covariance_residual,
              1e-8);
  }
}

void check_kinematic_definition(CheckReport& r) {
  constexpr double tol = 1e-8;
  double square = 0.0, anti = 0.0, cov = 0.0;
  int failing = 0;
  for (int twice = 1; twice <= 3; ++twice) {
    const KinematicReport k = is_fully_kinematic(
        KinematicOperatorFamily::parity(rep_generators(HalfInt(twice))), 50, tol, r.seed);
    square = std::max(square, k.max_square_residual);
    anti = std::max(anti, k.max_anticommutator_residual);
    cov = std::max(cov, k.max_covariance_residual);
    if (!k.fully_kinematic()) ++failing;
  }
  r.at_most("kinematics.parity.square", square, tol);
  r.at_most("kinematics.parity.anticommutator", anti, tol);
  r.at_most("kinematics.parity.covariance", cov, tol);
  r.at_most("kinematics.parity.failing_spins", failing, 0.0);

  Rng rng(r.seed);
  square = anti = cov = 0.0;
  failing = 0;
  for (int s = 0; s < 10; ++s) {
    const Complex a = std::polar(std::exp(rng.uniform(std::log(0.1), std::log(10.0))),
                                 rng.uniform(0.0, 2.0 * std::numbers::pi));
    for (int twice = 1; twice <= 2; ++twice) {
      const KinematicReport k = is_fully_kinematic(
          KinematicOperatorFamily::scaled_swap(rep_generators(HalfInt(twice)), a), 20, tol,
          r.seed + static_cast<std::uint64_t>(s));
      square = std::max(square, k.max_square_residual);
      anti = std::max(anti, k.max_anticommutator_residual);
      cov = std::max(cov, k.max_covariance_residual);
      if (!k.fully_kinematic()) ++failing;
    }
  }
  r.at_most("kinematics.scaled_swap.square", square, tol);
  r.at_most("kinematics.scaled_swap.anticommutator", anti, tol);
  r.at_most("kinematics.scaled_swap.covariance", cov, tol);
  r.at_most("kinematics.scaled_swap.failing", failing, 0.0);

  const RepGenerators half = rep_generators(HalfInt(1));
  double min_square = std::numeric_limits<double>::infinity();
  int squares_ok = 0;
  anti = 0.0;
  for (int ia = 0; ia < 5; ++ia) {
    for (int ib = 0; ib < 5; ++ib) {
      const Complex a = std::polar(std::pow(10.0, -1.0 + 0.5 * ia), rng.uniform(0.0, 2.0 * std::numbers::pi));
      const Complex b = std::polar(std::pow(10.0, -1.0 + 0.5 * ib), rng.uniform(0.0, 2.0 * std::numbers::pi));
      const KinematicReport k = is_fully_kinematic(
          KinematicOperatorFamily::antilinear_theta(half, a, b), 10, tol, r.seed);
      ComplexMatrix rest = KinematicOperatorFamily::antilinear_theta(half, a, b).rest_matrix;
      const ComplexMatrix sq = rest * rest.conjugate() - identity(4);
      min_square = std::min({min_square, sq.norm(), k.max_square_residual});
      anti = std::max(anti, k.max_anticommutator_residual);
      if (k.squares_to_identity) ++squares_ok;
    }
  }
  r.at_least("kinematics.antilinear_theta.min_square_residual", min_square, 1.0);
  r.at_most("kinematics.antilinear_theta.squares_to_identity", squares_ok, 0.0);
  r.note("kinematics.antilinear_theta.anticommutator", anti);
}

void check_antilinear_nogo(CheckReport& r) {
  const AntilinearSolutions sol = antilinear_kinematic_solutions(rep_generators(HalfInt(1)), 1e-10);
  r.at_most("elko.antilinear.dimension_mismatch", std::abs(sol.dimension - 2), 0.0);
  r.at_most("elko.antilinear.span_residual", sol.span_residual, 1e-10);
  r.note("elko.antilinear.dimension", sol.dimension);
}

void check_elko_nogo(CheckReport& r, int samples) {
  const NogoSweep sweep = nogo_sweep(samples, r.seed, 0.1, 0.01);
  r.above("elko.nogo.min_max_r", sweep.min_max_r, 0.01);
  r.note("elko.nogo.drawn", sweep.drawn);

  Rng rng(r.seed);
  double constructed_det = 0.0, constructed_conditions = 0.0;
  double invariant_commutant = 0.0;
  double random_commutant = std::numeric_limits<double>::infinity();
  int disagreements = 0;
  constexpr double tol = 1e-9;
  auto classify = [&](const Cx2Basis& b) {
    const SchurResiduals s = schur_conditions(b);
    const double commutant = numerator_commutant(b);
    if ((std::max(s.r1, s.r2) <= tol) != (commutant <= tol)) ++disagreements;
    return std::pair{std::max(s.r1, s.r2), commutant};
  };
  for (int s = 0; s < 100; ++s) {
    Spinor2 u(rng.complex_normal(), rng.complex_normal());
    u /= u.norm();
    const Spinor2 v = invariant_partner(u, rng);
    const Cx2Basis b = Cx2Basis::from(u, v);
    const auto [cond, commutant] = classify(b);
    constructed_det = std::max(constructed_det, std::abs(b.det()));
    constructed_conditions = std::max(constructed_conditions, cond);
    invariant_commutant = std::max(invariant_commutant, commutant);
  }
  for (int s = 0; s < 100; ++s) {
    const Cx2Basis b = random_basis(rng, 0.1);
    random_commutant = std::min(random_commutant, rotation_commutant_residual(g_operator(b)));
    classify(b);
  }
  r.at_most("elko.nogo.constructed_conditions", constructed_conditions, 1e-10);
  r.at_most("elko.nogo.constructed_det", constructed_det, 1e-10);
  r.at_most("elko.schur.disagreements", disagreements, 0.0);
  r.note("elko.schur.invariant_commutant", invariant_commutant);
  r.note("elko.schur.random_min_commutant", random_commutant);
}

void check_g_operator(CheckReport& r, int samples) {
  Rng rng(r.seed);
  double square = 0.0, eigen = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Cx2Basis b = random_basis(rng, 0.1);
    const ComplexMatrix g = g_operator(b);
    square = std::max(square, (g * g - identity(4)).norm());
    const ElkoSpinors e = elko_basis(b);
    for (const auto& [psi, sign] : {std::pair{e.u_plus, 1.0}, std::pair{e.v_plus, 1.0},
                                    std::pair{e.u_minus, -1.0}, std::pair{e.v_minus, -1.0}}) {
      eigen = std::max(eigen, (g * psi - sign * psi).norm() / psi.norm());
    }
  }
  r.at_most("elko.g.square", square, 1e-10);
  r.at_most("elko.g.eigen_relations", eigen, 1e-10);

  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 3) = -kI;
  expected(1, 2) = kI;
  expected(2, 1) = -kI;
  expected(3, 0) = kI;
  const ComplexMatrix g = g_operator(Cx2Basis::from(Spinor2(1, 0), Spinor2(0, 1)));
  r.at_most("elko.g.e1_e2", (g - expected).cwiseAbs().maxCoeff(), 1e-14);
}

void check_decomposition(CheckReport& r, int samples) {
  Rng rng(r.seed);
  double canonical = 0.0, helicity = 0.0, chain = 0.0;
  int not_unique = 0;
  for (int s = 0; s < samples; ++s) {
    const FourMomentum q = sample_momentum(rng);
    const Vec3 dir = q.momentum().isZero(0.0) ? Vec3(Vec3::UnitZ()) : q.momentum();
    const SpinorBasis bases[] = {rest_spinors(HalfInt(1), q.mass()),
                                 helicity_elko_basis(q.mass(), dir)};
    for (int k = 0; k < 2; ++k) {
      const Decomposition d = decompose(bases[k], q);
      const double res = decomposition_residual(bases[k], q);
      (k == 0 ? canonical : helicity) = std::max(k == 0 ? canonical : helicity, res);
      for (double c : d.chain) chain = std::max(chain, c);
      if (!d.xi_solution.unique) ++not_unique;
    }
  }
  r.at_most("decomposition.canonical", canonical, 1e-9);
  r.at_most("decomposition.helicity", helicity, 1e-9);
  r.at_most("decomposition.xi_not_unique", not_unique, 0.0);
  r.at_most("decomposition.chain", chain, 1e-9);
}

void check_tensor_swap(CheckReport& r, int samples) {
  for (int twice = 1; twice <= 2; ++twice) {
    const HalfInt j(twice);
    const std::string tag = "higher_spin.swap.j=" + spin_label(twice);
    const ComplexMatrix s = tensor_swap_operator(j);
    r.at_most(tag + ".square", (s * s - identity(s.rows())).cwiseAbs().maxCoeff(), 0.0);
    const TensorRepGenerators t = tensor_rep_generators(j);
    double anti = 0.0;
    for (const auto& k : t.gen.boost) anti = std::max(anti, anticommutator(s, k).norm());
    r.at_most(tag + ".anticommutator", anti, 1e-12);
    Rng rng(r.seed);
    double worst = 0.0;
    for (int n = 0; n < samples; ++n) {
      const FourMomentum q = sample_momentum(rng);
      for (const auto& u : boosted_spinors(j, q).u) {
        worst = std::max(worst, swap_intertwining_residual(j, u, q));
      }
    }
    r.at_most(tag + ".intertwining", worst, 1e-9);
  }
}

void check_origin(CheckReport& r) {
  const OriginReport o = helicity_origin_discontinuity(1.0);
  r.at_most("elko.origin.max_cauchy", o.max_cauchy, 1e-6);
  r.above("elko.origin.max_distance", o.max_distance, 0.1);
  for (std::size_t k = 1; k < o.labels.size(); ++k) {
    r.note("elko.origin.distance_z_to_" + o.labels[k], o.distance_from_z[k]);
  }
}

void check_gamma_tensor(CheckReport& r) {
  for (int twice = 1; twice <= 4; ++twice) {
    const GammaTensor g = extract_gamma_tensor(HalfInt(twice), 200, r.seed);
    const std::string tag = "higher_spin.gamma_tensor.j=" + spin_label(twice);
    r.at_most(tag + ".fit", g.fit_residual, 1e-8);
    r.at_most(tag + ".holdout", g.holdout_residual, 1e-8);
  }
}

CheckReport check_all(std::uint64_t seed, double tol_floor) {
  CheckReport r;
  r.command = "check all";
  r.seed = seed;
  r.tol_floor = tol_floor;
  check_dirac_identification(r);
  check_involution(r);
  check_field_equation(r);
  check_covariance(r);
  check_kinematic_definition(r);
  check_antilinear_nogo(r);
  check_elko_nogo(r);
  check_g_operator(r);
  check_decomposition(r);
  check_tensor_swap(r);
  check_origin(r);
  check_gamma_tensor(r);
  return r;
}

}  // namespace spinkin
