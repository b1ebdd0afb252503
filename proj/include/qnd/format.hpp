#pragma once

#include <cstdio>
#include <string>

namespace qnd {

/// Shortest text keeping every double distinguishable: 17 significant
/// digits round-trip exactly.  Non-finite values print as inf/-inf/nan.
inline std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace qnd
