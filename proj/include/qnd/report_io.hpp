#pragma once

#include <string>
#include <vector>

#include "qnd/config.hpp"
#include "qnd/verify.hpp"

namespace qnd {

/// Flat JSON object with the report fields in snake_case, the
/// coefficient matrix with row/column labels, and the tuning that
/// produced it.  Doubles are printed with 17 significant digits; an
/// infinite estimator variance serializes as null next to its explicit
/// flag.  Byte-deterministic for fixed inputs.
std::string report_to_json(const SchemeConfig& config,
                           const SchemeReport& report);

/// {"all_pass": ..., "checks": [{name, residual, tolerance, pass}...]}
std::string verification_to_json(const std::vector<CheckResult>& results);

/// Fixed-width human-readable listing, one line per check.
std::string verification_to_text(const std::vector<CheckResult>& results);

}  // namespace qnd
