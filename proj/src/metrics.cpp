#include "qnd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "qnd/channel.hpp"
#include "qnd/format.hpp"

namespace qnd {
namespace {

struct ReportIndices {
  // Register indices in uniform report order: probe cos, signal cos,
  // probe sin, signal sin.
  std::array<int, 4> order;
};

ReportIndices report_indices(const SchemeDescriptor& d) {
  return {{d.reg.cosine_index(d.probe), d.reg.cosine_index(d.signal),
           d.reg.sine_index(d.probe), d.reg.sine_index(d.signal)}};
}

Eigen::Matrix4d reorder(const Matrix& m, const ReportIndices& idx) {
  Eigen::Matrix4d out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out(i, j) = m(idx.order[i], idx.order[j]);
    }
  }
  return out;
}

// Input covariance in report order, assembled from single-mode probe and
// signal states.
Eigen::Matrix4d input_covariance(const GaussianState& probe_state,
                                 const GaussianState& signal_state) {
  Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();
  const Matrix& p = probe_state.cov();
  const Matrix& s = signal_state.cov();
  cov(0, 0) = p(0, 0);
  cov(2, 2) = p(1, 1);
  cov(0, 2) = cov(2, 0) = p(0, 1);
  cov(1, 1) = s(0, 0);
  cov(3, 3) = s(1, 1);
  cov(1, 3) = cov(3, 1) = s(0, 1);
  return cov;
}

void require_single_mode(const GaussianState& state, const char* role) {
  if (state.mode_register().n_modes() != 1) {
    throw std::invalid_argument(std::string(role) +
                                " state must live on a single-mode register");
  }
}

SchemeReport report_from_channel(const SchemeDescriptor& descriptor,
                                 const Eigen::Matrix4d& x,
                                 const Eigen::Matrix4d& y,
                                 const Eigen::Matrix4d& cov_in) {
  SchemeReport report;
  report.coefficient_matrix = x;
  report.quadrature_labels = {descriptor.probe + ".cos",
                              descriptor.signal + ".cos",
                              descriptor.probe + ".sin",
                              descriptor.signal + ".sin"};
  report.gain = x(0, 1);
  report.back_action_residual =
      std::max({std::abs(x(1, 0)), std::abs(x(1, 2)), std::abs(x(1, 3))});
  report.signal_amplification = x(1, 1);

  const double self_noise = std::abs(x(0, 0));
  report.snr_coefficient_ratio =
      self_noise > 0.0
          ? std::abs(report.gain) / self_noise
          : std::numeric_limits<double>::infinity();

  // Everything in the readout row except the estimand's own column,
  // plus injected channel noise.
  double noise_variance = y(0, 0);
  for (int j : {0, 2, 3}) {
    for (int k : {0, 2, 3}) {
      noise_variance += x(0, j) * x(0, k) * cov_in(j, k);
    }
  }
  if (report.gain == 0.0 || !std::isfinite(report.gain)) {
    report.estimator_variance_normalized =
        std::numeric_limits<double>::infinity();
    report.estimator_variance_is_infinite = true;
  } else {
    report.estimator_variance_normalized =
        noise_variance / (report.gain * report.gain) /
        standard_quantum_limit_variance;
    report.estimator_variance_is_infinite = false;
  }
  return report;
}

GaussianChannel port_loss(const SchemeDescriptor& d, const LossSpec& loss) {
  const bool on_probe = loss.port == LossSpec::Port::probe_in ||
                        loss.port == LossSpec::Port::probe_out;
  return loss_channel(d.reg, on_probe ? d.probe : d.signal, loss.eta);
}

}  // namespace

SchemeReport analyze(const SchemeDescriptor& descriptor,
                     const GaussianState& probe_state) {
  require_single_mode(probe_state, "probe");
  const BuiltScheme built = build_scheme(descriptor);
  const ReportIndices idx = report_indices(descriptor);
  const Eigen::Matrix4d x = reorder(built.transform.matrix(), idx);
  const GaussianState signal_vac = vacuum(probe_state.mode_register());
  return report_from_channel(descriptor, x, Eigen::Matrix4d::Zero(),
                             input_covariance(probe_state, signal_vac));
}

std::string_view to_string(LossSpec::Port port) {
  switch (port) {
    case LossSpec::Port::probe_in:
      return "probe_in";
    case LossSpec::Port::signal_in:
      return "signal_in";
    case LossSpec::Port::probe_out:
      return "probe_out";
    case LossSpec::Port::signal_out:
      return "signal_out";
  }
  return "unknown";
}

std::optional<LossSpec::Port> port_from_string(std::string_view text) {
  for (auto port : {LossSpec::Port::probe_in, LossSpec::Port::signal_in,
                    LossSpec::Port::probe_out, LossSpec::Port::signal_out}) {
    if (to_string(port) == text) {
      return port;
    }
  }
  return std::nullopt;
}

SchemeReport analyze_with_losses(const SchemeDescriptor& descriptor,
                                 const GaussianState& probe_state,
                                 const GaussianState& signal_state,
                                 const std::vector<LossSpec>& losses) {
  require_single_mode(probe_state, "probe");
  require_single_mode(signal_state, "signal");

  const BuiltScheme built = build_scheme(descriptor);
  GaussianChannel channel = GaussianChannel::from_transform(built.transform);
  for (const LossSpec& loss : losses) {
    const bool at_input = loss.port == LossSpec::Port::probe_in ||
                          loss.port == LossSpec::Port::signal_in;
    channel = at_input ? compose(port_loss(descriptor, loss), channel)
                       : compose(channel, port_loss(descriptor, loss));
  }

  const ReportIndices idx = report_indices(descriptor);
  const Eigen::Matrix4d x = reorder(channel.x_matrix(), idx);
  const Eigen::Matrix4d y = reorder(channel.y_matrix(), idx);
  return report_from_channel(descriptor, x, y,
                             input_covariance(probe_state, signal_state));
}

namespace {

SweepRow evaluate_sweep_row(SchemeName scheme, double r) {
  const ModeRegister reg({"a", "b"});
  const ModeRegister probe_reg({"a"});
  const SchemeDescriptor descriptor{scheme, r, reg, "a", "b"};
  const SchemeReport report = analyze(descriptor, vacuum(probe_reg));
  return {r, report.gain, report.signal_amplification,
          report.snr_coefficient_ratio, report.estimator_variance_normalized};
}

void fill_rows_serial(SchemeName scheme, double r_min, double step,
                      std::vector<SweepRow>& rows) {
  const auto n = static_cast<std::int64_t>(rows.size());
  for (std::int64_t i = 0; i < n; ++i) {
    rows[i] = evaluate_sweep_row(scheme, r_min + step * static_cast<double>(i));
  }
}

void fill_rows_parallel(SchemeName scheme, double r_min, double step,
                        std::vector<SweepRow>& rows) {
  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    rows[i] = evaluate_sweep_row(scheme, r_min + step * static_cast<double>(i));
  }
}

// Least-squares slope of ln(snr) over the window, skipping points where
// the log is not finite.  Needs at least two usable points.
double fit_log_slope(const std::vector<SweepRow>& rows, std::size_t begin) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = begin; i < rows.size(); ++i) {
    const double y = std::log(rows[i].snr_coefficient_ratio);
    if (!std::isfinite(y)) {
      continue;
    }
    sx += rows[i].r;
    sy += y;
    sxx += rows[i].r * rows[i].r;
    sxy += rows[i].r * y;
    ++n;
  }
  const double denom = n * sxx - sx * sx;
  if (n < 2 || denom == 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

SweepTable sweep(SchemeName scheme, double r_min, double r_max, int steps,
                 ExecutionPolicy policy) {
  if (!(r_min < r_max) || steps < 2) {
    throw std::invalid_argument(
        "sweep requires r_min < r_max and at least two steps");
  }
  SweepTable table;
  table.scheme = scheme;
  table.rows.resize(static_cast<std::size_t>(steps));
  const double step = (r_max - r_min) / static_cast<double>(steps - 1);
  if (policy == ExecutionPolicy::parallel) {
    fill_rows_parallel(scheme, r_min, step, table.rows);
  } else {
    fill_rows_serial(scheme, r_min, step, table.rows);
  }

  const double midpoint = (r_min + r_max) / 2.0;
  std::size_t begin = 0;
  while (begin < table.rows.size() && table.rows[begin].r < midpoint) {
    ++begin;
  }
  if (table.rows.size() - begin < 2) {
    begin = table.rows.size() - 2;  // degenerate grid: use the last interval
  }
  table.log_snr_slope = fit_log_slope(table.rows, begin);
  return table;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table,
                     const std::vector<std::string>& comment_header) {
  for (const std::string& line : comment_header) {
    out << "# " << line << "\n";
  }
  out << "r,gain,signal_amplification,snr_ratio,estimator_variance_normalized"
      << "\n";
  for (const SweepRow& row : table.rows) {
    out << format_double(row.r) << ',' << format_double(row.gain) << ','
        << format_double(row.signal_amplification) << ','
        << format_double(row.snr_coefficient_ratio) << ','
        << format_double(row.estimator_variance_normalized) << "\n";
  }
  out << "# fitted_log_snr_slope = " << format_double(table.log_snr_slope)
      << "\n";
}

}  // namespace qnd
