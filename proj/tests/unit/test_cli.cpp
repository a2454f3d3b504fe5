#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "spinkin/json_io.hpp"
#include "spinkin/lorentz_rep.hpp"
#include "test_support.hpp"

using namespace spinkin;
using spinkin::test::max_abs;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(SPINKIN_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parity at rest for j = 1 is the 6x6 block swap (golden)") {
  const Result r = run({"parity", "--spin", "1", "--mass", "1", "--p", "0,0,0", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == read_golden("parity_j1_rest.json"));
  const Json j = Json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  ComplexMatrix swap = ComplexMatrix::Zero(6, 6);
  for (int k = 0; k < 3; ++k) swap(k, k + 3) = swap(k + 3, k) = 1.0;
  CHECK(max_abs(matrix_from_json(j["parity"]) - swap) == 0.0);
}

TEST_CASE("elko g for e1, e2 (golden)") {
  const Result r = run({"elko", "g", "--u", "1,0", "--v", "0,1"});
  CHECK(r.code == 0);
  CHECK(r.out == read_golden("elko_g_e1_e2.json"));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 3) = Complex(0, -1);
  expected(1, 2) = Complex(0, 1);
  expected(2, 1) = Complex(0, -1);
  expected(3, 0) = Complex(0, 1);
  const Json j = Json::parse(r.out);
  CHECK(max_abs(matrix_from_json(j["G"]) - expected) <= 1e-14);
  CHECK(j["schur"]["r1"] == 1.0);
}

TEST_CASE("complex arguments") {
  const Result r = run({"elko", "g", "--u", "1,1", "--v", "-i,i"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["schur"]["r1"] == 0.0);
  CHECK(j["schur"]["r2"] == 2.0);
  CHECK(j["det"] == Json::array({0.0, 2.0}));
  const Result mixed = run({"elko", "g", "--u", "0.5+2i,1e-1", "--v", "-1.5-0.25j,3i"});
  REQUIRE(mixed.code == 0);
  CHECK(Json::parse(mixed.out)["u"][0] == Json::array({0.5, 2.0}));
  CHECK(Json::parse(mixed.out)["v"][0] == Json::array({-1.5, -0.25}));
  CHECK(run({"elko", "g", "--u", "1,x"}).code == 2);
}

TEST_CASE("usage errors exit 2 with usage text on stderr") {
  Result r = run({"parity", "--bogus"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("--help") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"elko"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"decompose", "--basis", "spherical"}).code == 2);
  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("generators") != std::string::npos);
}

TEST_CASE("domain errors exit 2") {
  Result r = run({"parity", "--mass", "-1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") == 0);
  CHECK(run({"parity", "--spin", "0.7"}).code == 2);
  CHECK(run({"parity", "--spin", "0"}).code == 2);
  CHECK(run({"parity", "--p", "1,2"}).code == 2);
  CHECK(run({"parity", "--p", "1e20,0,0"}).code == 2);  // beyond the rapidity cap
  CHECK(run({"elko", "g", "--u", "1,2", "--v", "2,4"}).code == 2);
  CHECK(run({"elko", "origin", "--mass", "0"}).code == 2);
  CHECK(run({"gammatensor", "--spin", "1", "--samples", "5"}).code == 2);
  CHECK(run({"check", "kinematic", "--tol", "-1"}).code == 2);
}

TEST_CASE("check kinematic exit codes and tolerance precedence") {
  CHECK(run({"check", "kinematic", "--spin", "2", "--samples", "20", "--tol", "1e-6"}).code == 0);
  const Result strict = run({"check", "kinematic", "--spin", "2", "--samples", "20", "--tol", "1e-14"});
  CHECK(strict.code == 1);
  CHECK(Json::parse(strict.out)["pass"] == false);

  ::setenv("SPINKIN_TOL", "1e-14", 1);
  CHECK(run({"check", "kinematic", "--spin", "2", "--samples", "20"}).code == 1);
  CHECK(run({"check", "kinematic", "--spin", "2", "--samples", "20", "--tol", "1e-6"}).code == 0);
  ::setenv("SPINKIN_TOL", "garbage", 1);
  CHECK(run({"check", "kinematic"}).code == 2);
  ::unsetenv("SPINKIN_TOL");
  const Json j = Json::parse(run({"check", "kinematic", "--samples", "5", "--seed", "9"}).out);
  CHECK(j["seed"] == 9);
  CHECK(j["samples"] == 5);
  CHECK(j["thresholds"]["square"] == 1e-8);
}

TEST_CASE("check all is byte-identical for a fixed seed") {
  const Result a = run({"check", "all", "--seed", "42"});
  const Result b = run({"check", "all", "--seed", "42"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["pass"] == true);
  CHECK_FALSE(j.contains("runtime_ms"));
  const Result timed = run({"check", "all", "--seed", "42", "--timing"});
  CHECK(Json::parse(timed.out).contains("runtime_ms"));
}

TEST_CASE("every command emits schema_version 1") {
  const std::vector<std::vector<std::string>> commands = {
      {"generators", "--spin", "3/2"},
      {"parity", "--spin", "2", "--mass", "2", "--p=-1,0.5,2"},
      {"spinors", "--spin", "1/2", "--mass", "1.5", "--p", "0.1,0.2,0.3"},
      {"fieldeq", "--spin", "3/2", "--p", "0.5,0,0"},
      {"gammatensor", "--spin", "1/2", "--samples", "40", "--seed", "3"},
      {"elko", "nogo", "--samples", "300", "--seed", "5"},
      {"elko", "origin", "--mass", "2"},
      {"decompose", "--mass", "1.2", "--p", "0.3,-0.4,1", "--basis", "helicity"},
  };
  for (const auto& c : commands) {
    const Result r = run(c);
    INFO(c[0]);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["schema_version"] == 1);
  }
}

TEST_CASE("command payloads") {
  Json j = Json::parse(run({"generators", "--spin", "1/2"}).out);
  CHECK(j["dim"] == 4);
  CHECK(j["K"].size() == 3);

  j = Json::parse(run({"spinors", "--spin", "1/2", "--p", "0.2,0.1,-0.3"}).out);
  CHECK(j["u"].size() == 2);
  CHECK(j["residuals"]["dirac"].get<double>() <= 1e-10);

  j = Json::parse(run({"fieldeq", "--spin", "3/2", "--p", "0.5,0,0"}).out);
  CHECK(j["spectrum"]["plus_count"] == 4);
  CHECK(j["spectrum"]["minus_count"] == 4);

  j = Json::parse(run({"gammatensor", "--spin", "1/2", "--samples", "40"}).out);
  CHECK(j["rank"] == 4);
  CHECK(j["components"].size() == 4);

  for (const char* basis : {"canonical", "helicity"}) {
    j = Json::parse(run({"decompose", "--mass", "1.2", "--p", "0.3,-0.4,1", "--basis", basis}).out);
    CHECK(j["residual"].get<double>() <= 1e-9);
    CHECK(j["dirac_residual"].get<double>() <= 1e-9);
    CHECK(j["xi_solver"]["unique"] == true);
  }

  j = Json::parse(run({"elko", "origin"}).out);
  CHECK(j["rays"].size() == 4);
  CHECK(j["discontinuous"] == true);

  const Result nogo = run({"elko", "nogo", "--samples", "300"});
  CHECK(nogo.code == 0);
  CHECK(Json::parse(nogo.out)["pass"] == true);
}
