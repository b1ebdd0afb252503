#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qnd/metrics.hpp"

namespace qnd {

/// Input preparation for one mode.
struct StatePrep {
  enum class Kind { vacuum, coherent };
  Kind kind = Kind::vacuum;
  double alpha_c = 0.0;
  double alpha_s = 0.0;
};

/// Hand-editable description of one analysis run: flat key = value
/// lines, `#` comments, and repeated `loss = <port> <eta>` entries.
struct SchemeConfig {
  SchemeName scheme = SchemeName::fig3_nopa;
  double r = 1.0;
  StatePrep probe_state;
  StatePrep signal_state;
  std::vector<LossSpec> losses;
};

/// Parse failure with enough context to point at the offending line.
class ConfigError : public std::runtime_error {
public:
  ConfigError(int line, std::string field, const std::string& message);
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

private:
  int line_;
  std::string field_;
};

/// Accepted keys: scheme, r, probe_state, signal_state, loss.
SchemeConfig parse_config(std::istream& in);
SchemeConfig parse_config_file(const std::string& path);

/// Parses a single `key = value` assignment into an existing config
/// (used for command-line overrides).  line is reported on error.
void apply_config_entry(SchemeConfig& config, const std::string& key,
                        const std::string& value, int line = 0);

/// Normalized text that parse_config() reads back to an equivalent
/// config.
std::string dump_config(const SchemeConfig& config);

/// Builds the two-mode scheme (probe "a", signal "b") plus input states
/// and losses described by the config and produces its report.
SchemeReport run_analysis(const SchemeConfig& config);

SchemeDescriptor descriptor_for(const SchemeConfig& config);

}  // namespace qnd
