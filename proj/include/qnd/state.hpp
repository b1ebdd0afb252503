#pragma once

#include <string>
#include <string_view>

#include "qnd/channel.hpp"
#include "qnd/symplectic.hpp"

namespace qnd {

/// Mean vector and covariance matrix of the quadratures of a register.
/// The covariance must be symmetric and satisfy the uncertainty relation
/// cov + (i/2) Omega >= 0.
class GaussianState {
public:
  GaussianState(Vector mean, Matrix cov, ModeRegister reg);

  const Vector& mean() const noexcept { return mean_; }
  const Matrix& cov() const noexcept { return cov_; }
  const ModeRegister& mode_register() const noexcept { return register_; }

  /// Smallest eigenvalue of cov + (i/2) Omega; non-negative (up to
  /// eigensolver noise) for every admissible state, exactly zero for
  /// pure states.
  double uncertainty_min_eigenvalue() const;

private:
  Vector mean_;
  Matrix cov_;
  ModeRegister register_;
};

/// All modes in vacuum: zero mean, cov = vacuum_variance * I.
GaussianState vacuum(const ModeRegister& reg);

/// Vacuum displaced on one mode by (alpha_c, alpha_s) in quadrature
/// units.
GaussianState coherent(const ModeRegister& reg, std::string_view mode,
                       double alpha_c, double alpha_s);

/// mean -> S mean, cov -> S cov S^T.
GaussianState apply(const GaussianState& state, const SymplecticTransform& s);

/// mean -> X mean, cov -> X cov X^T + Y.
GaussianState apply(const GaussianState& state, const GaussianChannel& channel);

struct HomodyneResult {
  std::string mode;
  double phase = 0.0;  ///< 0 reads the cosine quadrature, pi/2 the sine
  double mean = 0.0;
  double variance = 0.0;
};

/// Statistics of the quadrature cos(phase) q_cos + sin(phase) q_sin of
/// one mode.
HomodyneResult homodyne_stats(const GaussianState& state,
                              std::string_view mode, double phase);

}  // namespace qnd
