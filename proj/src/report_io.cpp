#include "qnd/report_io.hpp"

#include <cmath>
#include <sstream>

#include "qnd/format.hpp"

namespace qnd {
namespace {

std::string json_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
    }
    out.push_back(c);
  }
  return out;
}

std::string json_number(double value) {
  if (!std::isfinite(value)) {
    return "null";  // JSON has no infinity literal
  }
  return format_double(value);
}

}  // namespace

std::string report_to_json(const SchemeConfig& config,
                           const SchemeReport& report) {
  const BuiltScheme built = build_scheme(descriptor_for(config));
  std::ostringstream out;
  out << "{\n";
  out << "  \"scheme\": \"" << to_string(config.scheme) << "\",\n";
  out << "  \"r\": " << json_number(config.r) << ",\n";
  out << "  \"tuned_parameters\": {\"R\": "
      << json_number(built.tuned.reflectivity)
      << ", \"T\": " << json_number(built.tuned.transmissivity)
      << ", \"A\": " << json_number(built.tuned.amplification) << "},\n";
  out << "  \"port_map\": [" << built.port_map[0] << ", " << built.port_map[1]
      << ", " << built.port_map[2] << ", " << built.port_map[3] << "],\n";

  out << "  \"coefficient_matrix_rows\": [";
  for (int i = 0; i < 4; ++i) {
    out << (i ? ", " : "") << "\"out:" << json_escape(report.quadrature_labels[static_cast<std::size_t>(i)])
        << "\"";
  }
  out << "],\n";
  out << "  \"coefficient_matrix_columns\": [";
  for (int j = 0; j < 4; ++j) {
    out << (j ? ", " : "") << "\"in:" << json_escape(report.quadrature_labels[static_cast<std::size_t>(j)])
        << "\"";
  }
  out << "],\n";
  out << "  \"coefficient_matrix\": [\n";
  for (int i = 0; i < 4; ++i) {
    out << "    [";
    for (int j = 0; j < 4; ++j) {
      out << (j ? ", " : "") << json_number(report.coefficient_matrix(i, j));
    }
    out << (i + 1 < 4 ? "],\n" : "]\n");
  }
  out << "  ],\n";
  out << "  \"gain\": " << json_number(report.gain) << ",\n";
  out << "  \"back_action_residual\": "
      << json_number(report.back_action_residual) << ",\n";
  out << "  \"signal_amplification\": "
      << json_number(report.signal_amplification) << ",\n";
  out << "  \"snr_coefficient_ratio\": "
      << json_number(report.snr_coefficient_ratio) << ",\n";
  out << "  \"estimator_variance_normalized\": "
      << json_number(report.estimator_variance_normalized) << ",\n";
  out << "  \"estimator_variance_is_infinite\": "
      << (report.estimator_variance_is_infinite ? "true" : "false") << "\n";
  out << "}\n";
  return out.str();
}

std::string verification_to_json(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  out << "{\n  \"all_pass\": " << (all_pass(results) ? "true" : "false")
      << ",\n  \"checks\": [\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CheckResult& check = results[i];
    out << "    {\"name\": \"" << json_escape(check.name)
        << "\", \"residual\": " << json_number(check.residual)
        << ", \"tolerance\": " << json_number(check.tolerance)
        << ", \"pass\": " << (check.pass ? "true" : "false") << "}"
        << (i + 1 < results.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string verification_to_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const CheckResult& check : results) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-38s %-4s residual %-12.3e tol %.0e\n",
                  check.name.c_str(), check.pass ? "ok" : "FAIL",
                  check.residual, check.tolerance);
    out << line;
  }
  out << (all_pass(results) ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace qnd
