#pragma once

#include <string_view>

#include "qnd/symplectic.hpp"

namespace qnd {

/// Affine map of Gaussian statistics, cov -> X cov X^T + Y, generalizing
/// a symplectic transform (X = S, Y = 0) to lossy evolution.  Kept as a
/// separate type so symplecticity checks are never run against lossy
/// maps.
class GaussianChannel {
public:
  /// y must be symmetric within 1e-12; it is symmetrized on storage.
  GaussianChannel(Matrix x, Matrix y, ModeRegister reg);

  static GaussianChannel from_transform(const SymplecticTransform& s);

  const Matrix& x_matrix() const noexcept { return x_; }
  const Matrix& y_matrix() const noexcept { return y_; }
  const ModeRegister& mode_register() const noexcept { return register_; }

private:
  Matrix x_;
  Matrix y_;
  ModeRegister register_;
};

/// Beamsplitter-to-vacuum loss on one mode with intensity transmission
/// eta in [0, 1]: X scales the mode's quadratures by sqrt(eta) and Y adds
/// (1 - eta) * vacuum_variance on each of them.  eta = 1 is the identity
/// channel; eta = 0 replaces the mode by vacuum.
GaussianChannel loss_channel(const ModeRegister& reg, std::string_view mode,
                             double eta);

/// Circuit-order composition: X = X2 X1, Y = X2 Y1 X2^T + Y2.
GaussianChannel compose(const GaussianChannel& first,
                        const GaussianChannel& then);

/// Smallest eigenvalue of the Hermitian matrix
/// Y + (i/2) (Omega - X Omega X^T); the channel is completely positive
/// iff this is non-negative (up to eigensolver noise).
double complete_positivity_min_eigenvalue(const GaussianChannel& channel);

}  // namespace qnd
