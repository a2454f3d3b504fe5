#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinkin/json_io.hpp"
#include "spinkin/lorentz_rep.hpp"

namespace spinkin {

struct CheckItem {
  enum class Bound { AtMost, AtLeast, Above };

  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Bound bound = Bound::AtMost;

  bool pass() const;
};

/// Named residuals with thresholds plus informational values. Upper-bound
/// thresholds are raised to `tol_floor` when it is larger.
struct CheckReport {
  std::string command;
  std::uint64_t seed = 42;
  int samples = 0;  // 0 when every suite uses its own count
  double tol_floor = 0.0;
  std::vector<CheckItem> items;
  std::vector<std::pair<std::string, double>> info;
  std::optional<long long> runtime_ms;  // milliseconds, only when requested

  void at_most(std::string name, double value, double threshold);
  void at_least(std::string name, double value, double threshold);
  void above(std::string name, double value, double threshold);
  void note(std::string name, double value);

  bool pass() const;
  std::vector<std::string> failures() const;
};

/// {schema_version, command, seed, samples, max_residuals, lower_bounds,
/// thresholds, info, failed, pass[, runtime_ms]}
Json to_json(const CheckReport& report);

/// Parity family of spin j through is_fully_kinematic.
CheckReport check_kinematic(HalfInt j, int samples, double tol, std::uint64_t seed);

// Residual suites. Each appends to `r` using r.seed.
void check_dirac_identification(CheckReport& r, int samples = 1000);
void check_involution(CheckReport& r, int samples = 100);
void check_field_equation(CheckReport& r, int samples = 100);
void check_covariance(CheckReport& r, int samples = 100);
void check_kinematic_definition(CheckReport& r);
void check_antilinear_nogo(CheckReport& r);
void check_elko_nogo(CheckReport& r, int samples = 10000);
void check_g_operator(CheckReport& r, int samples = 100);
void check_decomposition(CheckReport& r, int samples = 100);
void check_tensor_swap(CheckReport& r, int samples = 50);
void check_origin(CheckReport& r);
void check_gamma_tensor(CheckReport& r);

/// Every suite above.
CheckReport check_all(std::uint64_t seed, double tol_floor = 0.0);

}  // namespace spinkin
