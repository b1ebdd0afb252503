#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qnd/metrics.hpp"

namespace qnd {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationOptions {
  int chain_trials = 1000;
  int state_trials = 500;
  int covariance_trials = 100;
  std::uint64_t seed = 20250810;
  /// Test hook: when non-zero this offset is injected into one scheme
  /// matrix entry so the corresponding check fails by a known amount.
  double injected_perturbation = 0.0;
  ExecutionPolicy policy = ExecutionPolicy::parallel;
};

/// Runs the full invariant battery (element identities, scheme
/// relations, symplecticity and uncertainty checks) and reports one
/// residual per named check.  Deterministic for a fixed seed under
/// either execution policy.
std::vector<CheckResult> run_verification(const VerificationOptions& options);

bool all_pass(const std::vector<CheckResult>& results);

/// Worst symplecticity residual over `trials` random ten-element circuit
/// compositions on a three-mode register.  Exposed separately so the
/// serial reference and the parallel path can be compared directly.
double composition_chain_battery(int trials, std::uint64_t seed,
                                 ExecutionPolicy policy);

}  // namespace qnd
