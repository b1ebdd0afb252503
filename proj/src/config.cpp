#include "qnd/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qnd/format.hpp"

namespace qnd {
namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> words;
  std::istringstream stream(text);
  std::string word;
  while (stream >> word) {
    words.push_back(word);
  }
  return words;
}

double parse_number(const std::string& text, int line,
                    const std::string& field) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(line, field, "expected a number, got '" + text + "'");
  }
  return value;
}

StatePrep parse_state(const std::string& value, int line,
                      const std::string& field) {
  const auto words = split_words(value);
  if (words.size() == 1 && words[0] == "vacuum") {
    return {};
  }
  if (words.size() == 3 && words[0] == "coherent") {
    StatePrep prep;
    prep.kind = StatePrep::Kind::coherent;
    prep.alpha_c = parse_number(words[1], line, field);
    prep.alpha_s = parse_number(words[2], line, field);
    return prep;
  }
  throw ConfigError(line, field,
                    "expected 'vacuum' or 'coherent <alpha_c> <alpha_s>'");
}

std::string dump_state(const StatePrep& prep) {
  if (prep.kind == StatePrep::Kind::vacuum) {
    return "vacuum";
  }
  return "coherent " + format_double(prep.alpha_c) + " " +
         format_double(prep.alpha_s);
}

GaussianState prepare(const StatePrep& prep) {
  const ModeRegister reg({"m"});
  if (prep.kind == StatePrep::Kind::vacuum) {
    return vacuum(reg);
  }
  return coherent(reg, "m", prep.alpha_c, prep.alpha_s);
}

}  // namespace

ConfigError::ConfigError(int line, std::string field,
                         const std::string& message)
    : std::runtime_error("config line " + std::to_string(line) + ", field '" +
                         field + "': " + message),
      line_(line),
      field_(std::move(field)) {}

void apply_config_entry(SchemeConfig& config, const std::string& key,
                        const std::string& value, int line) {
  if (key == "scheme") {
    const auto scheme = scheme_from_string(value);
    if (!scheme) {
      std::string known;
      for (SchemeName name : all_schemes()) {
        known += known.empty() ? "" : ", ";
        known += to_string(name);
      }
      throw ConfigError(line, key,
                        "unknown scheme '" + value + "' (known: " + known + ")");
    }
    config.scheme = *scheme;
  } else if (key == "r") {
    config.r = parse_number(value, line, key);
  } else if (key == "probe_state") {
    config.probe_state = parse_state(value, line, key);
  } else if (key == "signal_state") {
    config.signal_state = parse_state(value, line, key);
  } else if (key == "loss") {
    const auto words = split_words(value);
    if (words.size() != 2) {
      throw ConfigError(line, key, "expected '<port> <eta>'");
    }
    const auto port = port_from_string(words[0]);
    if (!port) {
      throw ConfigError(line, key,
                        "unknown port '" + words[0] +
                            "' (known: probe_in, signal_in, probe_out, "
                            "signal_out)");
    }
    const double eta = parse_number(words[1], line, key);
    if (!(eta >= 0.0 && eta <= 1.0)) {
      throw ConfigError(line, key, "eta must lie in [0, 1]");
    }
    config.losses.push_back({*port, eta});
  } else {
    throw ConfigError(line, key, "unknown key");
  }
}

SchemeConfig parse_config(std::istream& in) {
  SchemeConfig config;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') {
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line_number, "", "expected 'key = value'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(line_number, "", "missing key before '='");
    }
    apply_config_entry(config, key, value, line_number);
  }
  return config;
}

SchemeConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(0, "", "cannot open config file '" + path + "'");
  }
  return parse_config(in);
}

std::string dump_config(const SchemeConfig& config) {
  std::ostringstream out;
  out << "scheme = " << to_string(config.scheme) << "\n";
  out << "r = " << format_double(config.r) << "\n";
  out << "probe_state = " << dump_state(config.probe_state) << "\n";
  out << "signal_state = " << dump_state(config.signal_state) << "\n";
  for (const LossSpec& loss : config.losses) {
    out << "loss = " << to_string(loss.port) << ' ' << format_double(loss.eta)
        << "\n";
  }
  return out.str();
}

SchemeDescriptor descriptor_for(const SchemeConfig& config) {
  return {config.scheme, config.r, ModeRegister({"a", "b"}), "a", "b"};
}

SchemeReport run_analysis(const SchemeConfig& config) {
  return analyze_with_losses(descriptor_for(config),
                             prepare(config.probe_state),
                             prepare(config.signal_state), config.losses);
}

}  // namespace qnd
