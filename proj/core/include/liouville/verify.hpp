#pragma once

#include "liouville/symplectic.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace liouville {

inline constexpr const char* kReportVersion = "liouville-verify/1";

struct VerifyConfig {
  std::vector<std::size_t> m_list{1, 2};
  std::vector<unsigned> degrees{0, 1, 2, 3, 4, 5, 6};
  std::vector<Sign> signs{Sign::plus, Sign::minus};
  std::size_t trials = 50;
  std::uint64_t seed = 42;
  double float_tol_flow = 1e-8;
  double float_tol_scaling = 1e-5;
  std::size_t rk4_steps = 2000;
  /// Transvections multiplied together for each sampled γ.
  std::size_t gamma_factors = 4;
  /// Map-level checks (automorphisms, decompositions, isomorphisms) for
  /// d >= 4 expand maps of degree (d−1)² and run only for m up to this value.
  std::size_t high_degree_map_max_m = 1;
  /// Perturbs one coefficient of f_a inside the suite so that the
  /// conjugation check must fail; used to test the suite itself.
  bool inject_fault = false;

  /// Throws UsageError on an invalid configuration.
  void validate() const;
};

enum class CheckStatus { pass, fail, error };

const char* to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  /// Ordered key/value pairs (values already JSON-encoded).
  std::vector<std::pair<std::string, std::string>> parameters;
  CheckStatus status = CheckStatus::pass;
  std::size_t trials_run = 0;
  /// JSON object describing the first failing trial; empty on pass.
  std::string witness;
};

struct Report {
  VerifyConfig config;
  std::vector<CheckResult> checks;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errors = 0;
  std::string version = kReportVersion;

  bool ok() const { return failed == 0 && errors == 0; }
};

/// Runs every identity and falsification check over the configured cells.
/// Deterministic for a given configuration.
Report run_verification_suite(const VerifyConfig& config);

/// Byte-stable JSON serialization.
std::string to_json(const Report& report);

/// Names of all checks in suite order.
std::vector<std::string> check_names();

}  // namespace liouville
