// Command-line front end: builds measurement schemes from flags or a
// config file, runs the verification battery, and emits reports and
// sweep tables.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qnd/report_io.hpp"

namespace {

constexpr const char* version = "0.1.0";

int run_verify(bool json, int trials, std::uint64_t seed, bool perturb,
               bool serial) {
  qnd::VerificationOptions options;
  options.chain_trials = trials;
  options.seed = seed;
  options.injected_perturbation = perturb ? 1e-3 : 0.0;
  options.policy =
      serial ? qnd::ExecutionPolicy::serial : qnd::ExecutionPolicy::parallel;
  const auto results = qnd::run_verification(options);
  std::cout << (json ? qnd::verification_to_json(results)
                     : qnd::verification_to_text(results));
  return qnd::all_pass(results) ? 0 : 1;
}

int run_analyze(const qnd::SchemeConfig& config, const std::string& dump_path) {
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) {
      std::cerr << "cannot write config to '" << dump_path << "'\n";
      return 2;
    }
    out << qnd::dump_config(config);
  }
  std::cout << qnd::report_to_json(config, qnd::run_analysis(config));
  return 0;
}

int run_sweep(const std::string& scheme_text, double r_min, double r_max,
              int steps, const std::string& out_path, bool serial) {
  const auto scheme = qnd::scheme_from_string(scheme_text);
  if (!scheme) {
    std::cerr << "unknown scheme '" << scheme_text
              << "' (known: ideal, fig1_dopa, fig3_nopa, fig4_amplified)\n";
    return 2;
  }
  if (!(r_min < r_max) || steps < 2) {
    std::cerr << "sweep requires r_min < r_max and steps >= 2\n";
    return 2;
  }
  const auto table = qnd::sweep(*scheme, r_min, r_max, steps,
                                serial ? qnd::ExecutionPolicy::serial
                                       : qnd::ExecutionPolicy::parallel);
  const std::vector<std::string> header{std::string("qndsim ") + version};
  if (out_path.empty()) {
    qnd::write_sweep_csv(std::cout, table, header);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 2;
    }
    qnd::write_sweep_csv(out, table, header);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian simulator for quadrature QND measurement schemes"};
  app.set_version_flag("--version", version);
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the invariant battery");
  bool verify_json = false;
  bool verify_perturb = false;
  bool verify_serial = false;
  int verify_trials = 1000;
  std::uint64_t verify_seed = 20250810;
  verify->add_flag("--json", verify_json, "machine-readable report");
  verify->add_flag("--inject-perturbation", verify_perturb,
                   "test hook: corrupt one scheme matrix entry");
  verify->add_flag("--serial", verify_serial, "disable the parallel batteries");
  verify->add_option("--trials", verify_trials, "composition battery size")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "battery RNG seed");

  auto* analyze = app.add_subcommand(
      "analyze", "print the JSON report for one scheme instance");
  std::string config_path;
  std::string dump_path;
  std::string scheme_flag;
  std::string probe_flag;
  std::string signal_flag;
  std::vector<std::string> loss_flags;
  double r_flag = 0.0;
  analyze->add_option("--config", config_path, "config file path");
  analyze->add_option("--scheme", scheme_flag,
                      "ideal | fig1_dopa | fig3_nopa | fig4_amplified");
  auto* r_opt = analyze->add_option("--r", r_flag, "squeezing factor (gain for ideal)");
  analyze->add_option("--probe-state", probe_flag,
                      "'vacuum' or 'coherent <alpha_c> <alpha_s>'");
  analyze->add_option("--signal-state", signal_flag,
                      "'vacuum' or 'coherent <alpha_c> <alpha_s>'");
  analyze->add_option("--loss", loss_flags,
                      "'<port> <eta>' with port in probe_in, signal_in, "
                      "probe_out, signal_out (repeatable)");
  analyze->add_option("--dump-config", dump_path,
                      "write the normalized config to this path");

  auto* sweep = app.add_subcommand(
      "sweep", "write a CSV diagnostics table over a squeezing range");
  std::string sweep_scheme;
  double r_min = 0.0;
  double r_max = 0.0;
  int steps = 0;
  std::string out_path;
  bool sweep_serial = false;
  sweep->add_option("scheme", sweep_scheme)->required();
  sweep->add_option("r_min", r_min)->required();
  sweep->add_option("r_max", r_max)->required();
  sweep->add_option("steps", steps)->required();
  sweep->add_option("--out", out_path, "output path (default stdout)");
  sweep->add_flag("--serial", sweep_serial, "disable the parallel row fill");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      return run_verify(verify_json, verify_trials, verify_seed,
                        verify_perturb, verify_serial);
    }
    if (analyze->parsed()) {
      qnd::SchemeConfig config;
      if (!config_path.empty()) {
        config = qnd::parse_config_file(config_path);
      }
      if (!scheme_flag.empty()) {
        qnd::apply_config_entry(config, "scheme", scheme_flag);
      }
      if (r_opt->count() > 0) {
        config.r = r_flag;
      }
      if (!probe_flag.empty()) {
        qnd::apply_config_entry(config, "probe_state", probe_flag);
      }
      if (!signal_flag.empty()) {
        qnd::apply_config_entry(config, "signal_state", signal_flag);
      }
      for (const std::string& loss : loss_flags) {
        qnd::apply_config_entry(config, "loss", loss);
      }
      return run_analyze(config, dump_path);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_scheme, r_min, r_max, steps, out_path,
                       sweep_serial);
    }
  } catch (const qnd::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
