#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qnd {

/// An ordered collection of named optical modes.
///
/// The register fixes the quadrature ordering used by every matrix and
/// vector in this library: for a register of n modes, index k in [0, n)
/// is the cosine (amplitude) quadrature of mode k and index n + k is its
/// sine (phase) quadrature.  All beamsplitters and parametric amplifiers
/// are block diagonal in this ordering.
class ModeRegister {
public:
  /// Labels must be non-empty and pairwise distinct.
  explicit ModeRegister(std::vector<std::string> labels);

  int n_modes() const noexcept { return static_cast<int>(labels_.size()); }

  /// Dimension of the quadrature space, 2 * n_modes().
  int dim() const noexcept { return 2 * n_modes(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Position of a mode; throws std::out_of_range for unknown labels.
  int index_of(std::string_view label) const;

  int cosine_index(std::string_view label) const { return index_of(label); }
  int sine_index(std::string_view label) const {
    return n_modes() + index_of(label);
  }

  bool operator==(const ModeRegister&) const = default;

private:
  std::vector<std::string> labels_;
};

}  // namespace qnd
