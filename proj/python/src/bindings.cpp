#include <cmath>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinkin/checks.hpp"
#include "spinkin/decomposition.hpp"
#include "spinkin/dirac.hpp"
#include "spinkin/elko.hpp"
#include "spinkin/errors.hpp"
#include "spinkin/higher_spin.hpp"
#include "spinkin/kinematics.hpp"

namespace py = pybind11;
using namespace spinkin;

namespace {

HalfInt spin(double j) {
  const double twice = 2.0 * j;
  if (!(std::abs(twice - std::round(twice)) < 1e-12) || twice < 1.0) {
    throw DomainError("spin must be a positive multiple of 1/2");
  }
  return HalfInt(static_cast<int>(std::lround(twice)));
}

py::dict basis_dict(const SpinorBasis& b) {
  py::dict d;
  d["u"] = b.u;
  d["v"] = b.v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_spinkin, m) {
  m.doc() = "Parity operators and Elko constructions on (j,0)+(0,j).";

  static py::exception<Error> base(m, "Error", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
  py::register_exception<OffShellError>(m, "OffShellError", base.ptr());
  py::register_exception<DegenerateBasisError>(m, "DegenerateBasisError", base.ptr());
  py::register_exception<RankDeficientError>(m, "RankDeficientError", base.ptr());
  py::register_exception<NonHermitianBasisError>(m, "NonHermitianBasisError", base.ptr());

  m.def("generators", [](double j) {
    const RepGenerators rep = rep_generators(spin(j));
    py::dict d;
    d["J"] = rep.gen.rotation;
    d["K"] = rep.gen.boost;
    d["eta"] = rep.eta;
    return d;
  }, py::arg("j"));

  m.def("parity", [](double j, double mass, const Vec3& p) {
    return parity_operator(rep_generators(spin(j)), FourMomentum(mass, p));
  }, py::arg("j"), py::arg("mass"), py::arg("p"));

  m.def("boost", [](double j, const Vec3& phi) {
    return boost_matrix(rep_generators(spin(j)).gen, phi);
  }, py::arg("j"), py::arg("phi"));

  m.def("rapidity", [](double mass, const Vec3& p) {
    return rapidity_from_momentum(FourMomentum(mass, p));
  }, py::arg("mass"), py::arg("p"));

  m.def("gamma_matrices", [] {
    const GammaSet g = gamma_matrices();
    return g.gamma;
  });

  m.def("dirac_operator", [](double mass, const Vec3& p) {
    return dirac_operator(FourMomentum(mass, p));
  }, py::arg("mass"), py::arg("p"));

  m.def("spinors", [](double j, double mass, const Vec3& p) {
    return basis_dict(boosted_spinors(spin(j), FourMomentum(mass, p)));
  }, py::arg("j"), py::arg("mass"), py::arg("p"));

  m.def("parity_spectrum", [](double j, double mass, const Vec3& p) {
    const ParitySpectrum s = parity_spectrum(spin(j), FourMomentum(mass, p));
    py::dict d;
    d["eigenvalues"] = s.eigenvalues;
    d["det"] = s.det;
    d["plus_count"] = s.plus_count;
    d["minus_count"] = s.minus_count;
    d["max_deviation"] = s.max_deviation;
    return d;
  }, py::arg("j"), py::arg("mass"), py::arg("p"));

  m.def("tensor_swap", [](double j) { return tensor_swap_operator(spin(j)); }, py::arg("j"));

  m.def("charge_conjugation", [] { return charge_conjugation().linear_part(); },
        "Linear part M of C = M o conj.");

  m.def("elko_spinor", &elko_spinor, py::arg("w"), py::arg("sign"));

  m.def("elko_g", [](const Spinor2& u, const Spinor2& v) {
    return g_operator(Cx2Basis::from(u, v));
  }, py::arg("u"), py::arg("v"));

  m.def("schur_conditions", [](const Spinor2& u, const Spinor2& v) {
    const SchurResiduals r = schur_conditions(Cx2Basis::from(u, v));
    return py::make_tuple(r.r1, r.r2);
  }, py::arg("u"), py::arg("v"));

  m.def("nogo_sweep", [](int samples, std::uint64_t seed) {
    const NogoSweep s = nogo_sweep(samples, seed);
    py::dict d;
    d["accepted"] = s.accepted;
    d["drawn"] = s.drawn;
    d["min_max_r"] = s.min_max_r;
    d["pass"] = s.pass;
    return d;
  }, py::arg("samples") = 10000, py::arg("seed") = 42);

  m.def("decompose", [](double mass, const Vec3& p, const std::string& basis) {
    const FourMomentum q(mass, p);
    SpinorBasis rest = rest_spinors(HalfInt(1), mass);
    if (basis == "helicity") {
      rest = helicity_elko_basis(mass, p.isZero(0.0) ? Vec3(Vec3::UnitZ()) : p);
    } else if (basis != "canonical") {
      throw DomainError("basis must be canonical or helicity");
    }
    const Decomposition dec = decompose(rest, q);
    py::dict d;
    d["K"] = dec.k;
    d["Xi"] = dec.xi;
    d["parity"] = dec.parity;
    d["residual"] = dec.residual;
    d["unique"] = dec.xi_solution.unique;
    return d;
  }, py::arg("mass"), py::arg("p"), py::arg("basis") = "canonical");

  m.def("check_all_json", [](std::uint64_t seed) { return to_json(check_all(seed)).dump(); },
        py::arg("seed") = 42);
}
