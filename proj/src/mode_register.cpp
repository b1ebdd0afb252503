#include "qnd/mode_register.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace qnd {

ModeRegister::ModeRegister(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("ModeRegister requires at least one mode");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      throw std::invalid_argument("mode labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate mode label: " + label);
    }
  }
}

int ModeRegister::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw std::out_of_range("unknown mode label: " + std::string(label));
  }
  return static_cast<int>(it - labels_.begin());
}

}  // namespace qnd
