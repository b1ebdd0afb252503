#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "qnd/schemes.hpp"
#include "qnd/state.hpp"

namespace qnd {

/// Variance at the standard quantum limit: the vacuum quadrature
/// variance, used to normalize estimator variances.
inline constexpr double standard_quantum_limit_variance = vacuum_variance;

/// Scheme-level diagnostics derived from the coefficient matrix.  The
/// matrix is reported in uniform order (probe cosine, signal cosine,
/// probe sine, signal sine) with outputs in rows and inputs in columns,
/// regardless of register layout or physical port swaps.
struct SchemeReport {
  Eigen::Matrix4d coefficient_matrix;
  std::array<std::string, 4> quadrature_labels;
  /// Coefficient of the signal cosine input in the probe cosine output.
  double gain = 0.0;
  /// Max-abs of the forbidden entries in the signal cosine output row
  /// (everything except its own input coefficient).
  double back_action_residual = 0.0;
  /// Coefficient of the signal cosine input in the signal cosine output.
  double signal_amplification = 0.0;
  /// |gain| over the magnitude of the probe's own input coefficient in
  /// the readout row.
  double snr_coefficient_ratio = 0.0;
  /// Variance of the inferred signal cosine, in units of the standard
  /// quantum limit variance.  +infinity when the gain vanishes; sweeps
  /// traverse that point without aborting.
  double estimator_variance_normalized = 0.0;
  bool estimator_variance_is_infinite = false;
};

/// Diagnostics for a lossless scheme.  probe_state supplies the probe
/// input statistics on a single-mode register; all other inputs are
/// taken as vacuum.
SchemeReport analyze(const SchemeDescriptor& descriptor,
                     const GaussianState& probe_state);

/// One imaginary-beamsplitter loss applied at a scheme port.
struct LossSpec {
  enum class Port { probe_in, signal_in, probe_out, signal_out };
  Port port = Port::probe_out;
  double eta = 1.0;
};

std::string_view to_string(LossSpec::Port port);
std::optional<LossSpec::Port> port_from_string(std::string_view text);

/// Diagnostic analysis of the scheme wrapped in loss channels.  The
/// coefficient matrix becomes the composed channel's X matrix and the
/// estimator variance picks up the injected loss noise.  With no losses
/// and a vacuum signal this reduces exactly to analyze().
SchemeReport analyze_with_losses(const SchemeDescriptor& descriptor,
                                 const GaussianState& probe_state,
                                 const GaussianState& signal_state,
                                 const std::vector<LossSpec>& losses);

struct SweepRow {
  double r = 0.0;
  double gain = 0.0;
  double signal_amplification = 0.0;
  double snr_coefficient_ratio = 0.0;
  double estimator_variance_normalized = 0.0;
};

/// Rows of scheme diagnostics on a uniform squeezing grid, plus the
/// least-squares slope of ln(snr) versus r fitted over the top half of
/// the range (the scaling claims are asymptotic).
struct SweepTable {
  SchemeName scheme = SchemeName::fig3_nopa;
  std::vector<SweepRow> rows;
  double log_snr_slope = 0.0;
};

enum class ExecutionPolicy { serial, parallel };

/// Evaluates analyze() with a vacuum probe on `steps` evenly spaced
/// r values in [r_min, r_max].  Rows are written by index, so serial and
/// parallel execution produce identical tables.  Requires r_min < r_max
/// and steps >= 2.
SweepTable sweep(SchemeName scheme, double r_min, double r_max, int steps,
                 ExecutionPolicy policy = ExecutionPolicy::parallel);

/// Writes the table as CSV: optional leading comment lines, the fixed
/// header `r,gain,signal_amplification,snr_ratio,
/// estimator_variance_normalized`, one row per grid point with 17
/// significant digits, and a trailing comment carrying the fitted slope.
void write_sweep_csv(std::ostream& out, const SweepTable& table,
                     const std::vector<std::string>& comment_header = {});

}  // namespace qnd
