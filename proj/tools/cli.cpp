#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "spinkin/checks.hpp"
#include "spinkin/decomposition.hpp"
#include "spinkin/dirac.hpp"
#include "spinkin/elko.hpp"
#include "spinkin/errors.hpp"
#include "spinkin/higher_spin.hpp"
#include "spinkin/json_io.hpp"
#include "spinkin/kinematics.hpp"

namespace spinkin::cli {

namespace {

struct Options {
  std::string spin = "1/2";
  double mass = 1.0;
  std::string p = "0,0,0";
  int samples = 100;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  bool timing = false;
  std::string basis = "canonical";
  std::string u = "1,0";
  std::string v = "0,1";
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw DomainError("not a number: '" + s + "'");
  return x;
}

// Accepts "x", "yi", "x+yi", "x-yi", "i", "-i" ("j" also works as the unit).
Complex parse_complex(std::string s) {
  std::erase(s, ' ');
  if (s.empty()) throw DomainError("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_double(s), 0.0};
  s.pop_back();
  std::size_t split_at = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split_at == std::string::npos) return {0.0, imag_part(s)};
  return {parse_double(s.substr(0, split_at)), imag_part(s.substr(split_at))};
}

// Spin as j: "1/2", "3/2", "0.5", "1", "2".
HalfInt parse_spin(const std::string& s) {
  const auto parts = split(s, '/');
  double twice = 0.0;
  if (parts.size() == 2 && parts[1] == "2") {
    twice = parse_double(parts[0]);
  } else if (parts.size() == 1) {
    twice = 2.0 * parse_double(parts[0]);
  } else {
    throw DomainError("spin must look like 1/2, 3/2, 0.5 or 1, got '" + s + "'");
  }
  if (twice != std::round(twice) || twice < 1.0 || twice > 20.0) {
    throw DomainError("spin must be a positive multiple of 1/2 up to 10, got '" + s + "'");
  }
  return HalfInt(static_cast<int>(twice));
}

Vec3 parse_vec3(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw DomainError("expected px,py,pz, got '" + s + "'");
  return {parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
}

Spinor2 parse_spinor2(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw DomainError("expected two components a,b, got '" + s + "'");
  return {parse_complex(parts[0]), parse_complex(parts[1])};
}

std::optional<double> resolve_tol(const Options& o) {
  if (o.tol) {
    if (!(*o.tol > 0.0)) throw DomainError("--tol must be positive");
    return o.tol;
  }
  if (const char* env = std::getenv("SPINKIN_TOL"); env != nullptr && *env != '\0') {
    return ToleranceConfig::from_env().abs_tol;
  }
  return std::nullopt;
}

Json header(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Json momentum_json(const FourMomentum& q) {
  Json j;
  j["mass"] = q.mass();
  j["p"] = to_json(q.momentum());
  j["energy"] = q.energy();
  return j;
}

Json vectors_json(const std::vector<ComplexVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

int cmd_generators(const Options& o, Json& out) {
  const RepGenerators rep = rep_generators(parse_spin(o.spin));
  out = header("generators");
  out["spin"] = rep.j.value();
  out["dim"] = rep.dim();
  Json rot = Json::array(), boost = Json::array();
  for (int a = 0; a < 3; ++a) {
    rot.push_back(to_json(rep.gen.rotation[static_cast<std::size_t>(a)]));
    boost.push_back(to_json(rep.gen.boost[static_cast<std::size_t>(a)]));
  }
  out["J"] = std::move(rot);
  out["K"] = std::move(boost);
  out["eta"] = to_json(rep.eta);
  return kOk;
}

int cmd_parity(const Options& o, Json& out) {
  const RepGenerators rep = rep_generators(parse_spin(o.spin));
  const FourMomentum q(o.mass, parse_vec3(o.p));
  out = header("parity");
  out["spin"] = rep.j.value();
  out["momentum"] = momentum_json(q);
  out["rapidity"] = to_json(rapidity_from_momentum(q));
  out["parity"] = to_json(parity_operator(rep, q));
  return kOk;
}

int cmd_spinors(const Options& o, Json& out) {
  const HalfInt j = parse_spin(o.spin);
  const FourMomentum q(o.mass, parse_vec3(o.p));
  const SpinorBasis b = boosted_spinors(j, q);
  double u_res = 0.0, v_res = 0.0;
  for (const auto& u : b.u) u_res = std::max(u_res, field_equation_residual(j, u, q, 1));
  for (const auto& v : b.v) v_res = std::max(v_res, field_equation_residual(j, v, q, -1));
  out = header("spinors");
  out["spin"] = j.value();
  out["momentum"] = momentum_json(q);
  out["u"] = vectors_json(b.u);
  out["v"] = vectors_json(b.v);
  out["residuals"] = {{"u", u_res}, {"v", v_res}};
  if (j.twice() == 1) {
    double dirac = 0.0;
    for (const auto& u : b.u) dirac = std::max(dirac, dirac_residual(u, q, 1));
    for (const auto& v : b.v) dirac = std::max(dirac, dirac_residual(v, q, -1));
    out["residuals"]["dirac"] = dirac;
  }
  return kOk;
}

int cmd_fieldeq(const Options& o, const std::optional<double>& tol, Json& out) {
  const HalfInt j = parse_spin(o.spin);
  const RepGenerators rep = rep_generators(j);
  const FourMomentum q(o.mass, parse_vec3(o.p));
  const ParitySpectrum spec = parity_spectrum(j, q, tol.value_or(1e-7));
  out = header("fieldeq");
  out["spin"] = j.value();
  out["momentum"] = momentum_json(q);
  out["operator"] = to_json(parity_operator(rep, q));
  Json eig = Json::array();
  for (const Complex z : spec.eigenvalues) eig.push_back(to_json(z));
  out["spectrum"] = {{"eigenvalues", std::move(eig)},
                     {"det", to_json(spec.det)},
                     {"plus_count", spec.plus_count},
                     {"minus_count", spec.minus_count},
                     {"max_deviation", spec.max_deviation}};
  out["square_residual"] = contraction_identity_residual(j, q);
  return kOk;
}

int cmd_gammatensor(const Options& o, Json& out) {
  const GammaTensor g = extract_gamma_tensor(parse_spin(o.spin), o.samples, o.seed);
  out = header("gammatensor");
  out["spin"] = g.spin().value();
  out["seed"] = g.seed;
  out["samples"] = g.sample_count;
  out["rank"] = g.rank;
  out["fit_residual"] = g.fit_residual;
  out["holdout_residual"] = g.holdout_residual;
  Json comps = Json::array();
  for (const auto& [index, matrix] : g.components()) {
    comps.push_back({{"index", index}, {"matrix", to_json(matrix)}});
  }
  out["components"] = std::move(comps);
  return kOk;
}

int cmd_elko_g(const Options& o, const std::optional<double>& tol, Json& out) {
  const Cx2Basis b = Cx2Basis::from(parse_spinor2(o.u), parse_spinor2(o.v));
  const ComplexMatrix g = g_operator(b, tol.value_or(1e-10));
  const SchurResiduals s = schur_conditions(b);
  out = header("elko g");
  out["u"] = to_json(ComplexVector(b.u()));
  out["v"] = to_json(ComplexVector(b.v()));
  out["det"] = to_json(b.det());
  out["G"] = to_json(g);
  out["schur"] = {{"r1", s.r1}, {"r2", s.r2}};
  out["rotation_commutant"] = rotation_commutant_residual(g);
  return kOk;
}

int cmd_elko_nogo(const Options& o, Json& out) {
  const NogoSweep sweep = nogo_sweep(o.samples, o.seed);
  out = header("elko nogo");
  out["seed"] = sweep.seed;
  out["samples"] = sweep.accepted;
  out["drawn"] = sweep.drawn;
  out["min_det"] = sweep.min_det;
  out["threshold"] = sweep.threshold;
  out["min_max_r"] = sweep.min_max_r;
  out["pass"] = sweep.pass;
  return sweep.pass ? kOk : kCheckFailed;
}

int cmd_elko_origin(const Options& o, Json& out) {
  const OriginReport r = helicity_origin_discontinuity(o.mass);
  out = header("elko origin");
  out["mass"] = r.m;
  out["eps"] = r.eps;
  Json rays = Json::array();
  for (std::size_t k = 0; k < r.labels.size(); ++k) {
    rays.push_back({{"direction", r.labels[k]},
                    {"cauchy", r.cauchy[k]},
                    {"distance_from_z", r.distance_from_z[k]},
                    {"limit", to_json(r.limits[k])}});
  }
  out["rays"] = std::move(rays);
  out["max_distance"] = r.max_distance;
  out["max_cauchy"] = r.max_cauchy;
  out["discontinuous"] = r.discontinuous;
  return kOk;
}

int cmd_decompose(const Options& o, const std::optional<double>& tol, Json& out) {
  const FourMomentum q(o.mass, parse_vec3(o.p));
  SpinorBasis rest = rest_spinors(HalfInt(1), o.mass);
  if (o.basis == "helicity") {
    const Vec3 dir = q.momentum().isZero(0.0) ? Vec3(Vec3::UnitZ()) : q.momentum();
    rest = helicity_elko_basis(o.mass, dir);
  } else if (o.basis != "canonical") {
    throw DomainError("--basis must be canonical or helicity");
  }
  const Decomposition d = decompose(rest, q, tol.value_or(1e-10));
  out = header("decompose");
  out["basis"] = o.basis;
  out["momentum"] = momentum_json(q);
  out["K"] = to_json(d.k);
  out["Xi"] = to_json(d.xi);
  out["residual"] = d.residual;
  out["dirac_residual"] = decomposition_residual(rest, q);
  out["chain"] = d.chain;
  out["xi_solver"] = {{"rank", d.xi_solution.rank},
                      {"unknowns", d.xi_solution.unknowns},
                      {"constraints", d.xi_solution.constraints},
                      {"unique", d.xi_solution.unique},
                      {"constraint_residual", d.xi_solution.constraint_residual}};
  return kOk;
}

template <class F>
int timed_check(const Options& o, Json& out, F&& make) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r = make();
  if (o.timing) {
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  }
  out = to_json(r);
  return r.pass() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kinematic operators on (j,0)+(0,j) Lorentz representations", "spinkin"};
  app.require_subcommand(1);
  Options o;
  bool json_flag = false;

  auto add_common = [&](CLI::App* c) { c->add_flag("--json", json_flag, "Emit JSON (always on)"); };
  auto add_spin = [&](CLI::App* c) {
    c->add_option("--spin", o.spin, "Spin j: 1/2, 1, 3/2, ...");
  };
  auto add_momentum = [&](CLI::App* c) {
    c->add_option("--mass", o.mass, "Mass m > 0");
    c->add_option("--p", o.p, "Three-momentum px,py,pz (use --p=-1,0,0 for a leading minus)");
  };
  auto add_tol = [&](CLI::App* c) {
    c->add_option("--tol", o.tol, "Tolerance; overrides SPINKIN_TOL");
  };

  auto* generators = app.add_subcommand("generators", "J, K and eta of (j,0)+(0,j)");
  add_spin(generators);
  add_common(generators);

  auto* parity = app.add_subcommand("parity", "P(q) = exp(2iK.phi) eta");
  add_spin(parity);
  add_momentum(parity);
  add_common(parity);

  auto* spinors = app.add_subcommand("spinors", "Boosted u and v spinors with residuals");
  add_spin(spinors);
  add_momentum(spinors);
  add_common(spinors);

  auto* fieldeq = app.add_subcommand("fieldeq", "Field-equation operator and its spectrum");
  add_spin(fieldeq);
  add_momentum(fieldeq);
  add_tol(fieldeq);
  add_common(fieldeq);

  auto* gammatensor = app.add_subcommand("gammatensor", "Least-squares gamma tensor of order 2j");
  add_spin(gammatensor);
  gammatensor->add_option("--samples", o.samples, "On-shell samples")->check(CLI::PositiveNumber);
  gammatensor->add_option("--seed", o.seed, "RNG seed");
  add_common(gammatensor);

  auto* elko = app.add_subcommand("elko", "Elko operator G(u,v) and its no-go results");
  elko->require_subcommand(1);
  auto* elko_g = elko->add_subcommand("g", "G(u,v) for a basis of C^2");
  elko_g->add_option("--u", o.u, "u = a,b (complex, e.g. 1+2i)");
  elko_g->add_option("--v", o.v, "v = c,d");
  add_tol(elko_g);
  add_common(elko_g);
  auto* elko_nogo = elko->add_subcommand("nogo", "Random sweep of the rotation-invariance conditions");
  elko_nogo->add_option("--samples", o.samples, "Accepted bases")->check(CLI::PositiveNumber);
  elko_nogo->add_option("--seed", o.seed, "RNG seed");
  add_common(elko_nogo);
  auto* elko_origin = elko->add_subcommand("origin", "Directional limits of G at zero momentum");
  elko_origin->add_option("--mass", o.mass, "Mass m > 0");
  add_common(elko_origin);

  auto* decompose_cmd = app.add_subcommand("decompose", "gamma.p = m K(q) Xi(q) for spin 1/2");
  add_momentum(decompose_cmd);
  decompose_cmd->add_option("--basis", o.basis, "canonical or helicity")
      ->check(CLI::IsMember({"canonical", "helicity"}));
  add_tol(decompose_cmd);
  add_common(decompose_cmd);

  auto* check = app.add_subcommand("check", "Residual checkers; exit 1 on failure");
  check->require_subcommand(1);
  auto* check_kin = check->add_subcommand("kinematic", "Fully-kinematic test of the parity family");
  add_spin(check_kin);
  check_kin->add_option("--samples", o.samples, "Random momenta")->check(CLI::PositiveNumber);
  check_kin->add_option("--seed", o.seed, "RNG seed");
  add_tol(check_kin);
  check_kin->add_flag("--timing", o.timing, "Add runtime_ms to the report");
  add_common(check_kin);
  auto* check_all_cmd = check->add_subcommand("all", "Every residual suite");
  check_all_cmd->add_option("--seed", o.seed, "RNG seed");
  add_tol(check_all_cmd);
  check_all_cmd->add_flag("--timing", o.timing, "Add runtime_ms to the report");
  add_common(check_all_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  Json result;
  int code = kOk;
  try {
    const std::optional<double> tol = resolve_tol(o);
    if (generators->parsed()) {
      code = cmd_generators(o, result);
    } else if (parity->parsed()) {
      code = cmd_parity(o, result);
    } else if (spinors->parsed()) {
      code = cmd_spinors(o, result);
    } else if (fieldeq->parsed()) {
      code = cmd_fieldeq(o, tol, result);
    } else if (gammatensor->parsed()) {
      code = cmd_gammatensor(o, result);
    } else if (elko_g->parsed()) {
      code = cmd_elko_g(o, tol, result);
    } else if (elko_nogo->parsed()) {
      code = cmd_elko_nogo(o, result);
    } else if (elko_origin->parsed()) {
      code = cmd_elko_origin(o, result);
    } else if (decompose_cmd->parsed()) {
      code = cmd_decompose(o, tol, result);
    } else if (check_kin->parsed()) {
      code = timed_check(o, result, [&] {
        return check_kinematic(parse_spin(o.spin), o.samples, tol.value_or(1e-8), o.seed);
      });
    } else if (check_all_cmd->parsed()) {
      code = timed_check(o, result, [&] { return check_all(o.seed, tol.value_or(0.0)); });
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  out << result.dump(2) << "\n";
  return code;
}

}  // namespace spinkin::cli
