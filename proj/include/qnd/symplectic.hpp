#pragma once

#include <Eigen/Dense>
#include <string_view>

#include "qnd/mode_register.hpp"

namespace qnd {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Vacuum variance of a single quadrature.  With the commutator
/// [q_cos, q_sin] = i this library reads the standard quantum limit
/// "1/2" as a variance, so vacuum() carries 1/2 on every diagonal.
inline constexpr double vacuum_variance = 0.5;

/// The symplectic form in the all-cosine-then-all-sine ordering:
/// [[0, I], [-I, 0]].
Matrix symplectic_form(int n_modes);

/// A real linear map on the quadratures of a register that preserves the
/// commutator structure, S * Omega * S^T = Omega.  Lossless circuit
/// elements and their compositions are all of this form.
class SymplecticTransform {
public:
  SymplecticTransform(Matrix matrix, ModeRegister reg);

  static SymplecticTransform identity(const ModeRegister& reg);

  const Matrix& matrix() const noexcept { return matrix_; }
  const ModeRegister& mode_register() const noexcept { return register_; }

private:
  Matrix matrix_;
  ModeRegister register_;
};

/// The two reflective sign layouts used by the measurement schemes, the
/// balanced splitter, and a proper rotation.  All act identically on the
/// cosine and sine blocks.
enum class BeamsplitterVariant { b1, b2, symmetric, generic_orthogonal };

/// Two-port beamsplitter between mode_i and mode_j.  Requires
/// R^2 + T^2 = 1 (within 1e-12); the symmetric variant ignores R, T and
/// forces the balanced value 1/sqrt(2).  Block layouts:
///   b1:                [[-R, T], [T,  R]]
///   b2:                [[ R, T], [T, -R]]
///   symmetric:         [[ 1, 1], [1, -1]] / sqrt(2)
///   generic_orthogonal [[ R,-T], [T,  R]]
SymplecticTransform beamsplitter(const ModeRegister& reg,
                                 std::string_view mode_i,
                                 std::string_view mode_j, double reflectivity,
                                 double transmissivity,
                                 BeamsplitterVariant variant);

/// Non-degenerate parametric amplifier (two-mode squeezer) on the pair
/// (mode_i, mode_j): cosine block [[cosh r, sinh r], [sinh r, cosh r]],
/// sine block the same with r negated.
SymplecticTransform nopa(const ModeRegister& reg, std::string_view mode_i,
                         std::string_view mode_j, double r);

/// Degenerate parametric amplifier (single-mode squeezer): scales the
/// mode's cosine quadrature by e^r and its sine quadrature by e^{-r}.
SymplecticTransform dopa(const ModeRegister& reg, std::string_view mode,
                         double r);

/// Pi phase shift on one mode: both of its quadratures change sign.
SymplecticTransform sign_flip(const ModeRegister& reg, std::string_view mode);

/// Circuit-order composition: `first` acts first, so the result matrix is
/// then.matrix() * first.matrix().  Registers must match.
SymplecticTransform compose(const SymplecticTransform& first,
                            const SymplecticTransform& then);

struct SymplecticCheck {
  double residual = 0.0;  ///< max-abs entry of S*Omega*S^T - Omega
  bool pass = false;
};

/// Max-abs residual of the defining identity for a raw even-dimensional
/// square matrix.
double symplectic_residual(const Matrix& matrix);

SymplecticCheck check_symplectic(const SymplecticTransform& transform,
                                 double tol);

}  // namespace qnd
