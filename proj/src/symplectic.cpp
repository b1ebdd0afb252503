#include "qnd/symplectic.hpp"

#include <cmath>
#include <stdexcept>

namespace qnd {
namespace {

// e^r overflows double near r = 710; reject far earlier so downstream
// products stay finite.
constexpr double max_abs_squeezing = 300.0;

void require_squeezing_in_range(double r) {
  if (!std::isfinite(r) || std::abs(r) > max_abs_squeezing) {
    throw std::domain_error("squeezing factor out of range (|r| <= 300)");
  }
}

// Embeds a 2x2 block acting on the pair (i, j), applied identically to
// the cosine and sine sectors.
Matrix embed_pair_block(const ModeRegister& reg, int i, int j,
                        const Eigen::Matrix2d& cos_block,
                        const Eigen::Matrix2d& sin_block) {
  const int n = reg.n_modes();
  Matrix m = Matrix::Identity(2 * n, 2 * n);
  m(i, i) = cos_block(0, 0);
  m(i, j) = cos_block(0, 1);
  m(j, i) = cos_block(1, 0);
  m(j, j) = cos_block(1, 1);
  m(n + i, n + i) = sin_block(0, 0);
  m(n + i, n + j) = sin_block(0, 1);
  m(n + j, n + i) = sin_block(1, 0);
  m(n + j, n + j) = sin_block(1, 1);
  return m;
}

}  // namespace

Matrix symplectic_form(int n_modes) {
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  omega.topRightCorner(n_modes, n_modes) = Matrix::Identity(n_modes, n_modes);
  omega.bottomLeftCorner(n_modes, n_modes) =
      -Matrix::Identity(n_modes, n_modes);
  return omega;
}

SymplecticTransform::SymplecticTransform(Matrix matrix, ModeRegister reg)
    : matrix_(std::move(matrix)), register_(std::move(reg)) {
  if (matrix_.rows() != register_.dim() || matrix_.cols() != register_.dim()) {
    throw std::invalid_argument(
        "transform matrix dimension does not match register");
  }
}

SymplecticTransform SymplecticTransform::identity(const ModeRegister& reg) {
  return {Matrix::Identity(reg.dim(), reg.dim()), reg};
}

SymplecticTransform beamsplitter(const ModeRegister& reg,
                                 std::string_view mode_i,
                                 std::string_view mode_j, double reflectivity,
                                 double transmissivity,
                                 BeamsplitterVariant variant) {
  const int i = reg.index_of(mode_i);
  const int j = reg.index_of(mode_j);
  if (i == j) {
    throw std::invalid_argument("beamsplitter requires two distinct modes");
  }
  double r = reflectivity;
  double t = transmissivity;
  if (variant == BeamsplitterVariant::symmetric) {
    r = t = 1.0 / std::sqrt(2.0);
  } else if (std::abs(r * r + t * t - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "beamsplitter coefficients must satisfy R^2 + T^2 = 1");
  }

  Eigen::Matrix2d block;
  switch (variant) {
    case BeamsplitterVariant::b1:
      block << -r, t, t, r;
      break;
    case BeamsplitterVariant::b2:
      block << r, t, t, -r;
      break;
    case BeamsplitterVariant::symmetric:
      block << r, t, t, -r;
      break;
    case BeamsplitterVariant::generic_orthogonal:
      block << r, -t, t, r;
      break;
  }
  return {embed_pair_block(reg, i, j, block, block), reg};
}

SymplecticTransform nopa(const ModeRegister& reg, std::string_view mode_i,
                         std::string_view mode_j, double r) {
  const int i = reg.index_of(mode_i);
  const int j = reg.index_of(mode_j);
  if (i == j) {
    throw std::invalid_argument("nopa requires two distinct modes");
  }
  require_squeezing_in_range(r);
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  Eigen::Matrix2d cos_block, sin_block;
  cos_block << ch, sh, sh, ch;
  sin_block << ch, -sh, -sh, ch;
  return {embed_pair_block(reg, i, j, cos_block, sin_block), reg};
}

SymplecticTransform dopa(const ModeRegister& reg, std::string_view mode,
                         double r) {
  require_squeezing_in_range(r);
  const int k = reg.index_of(mode);
  const int n = reg.n_modes();
  Matrix m = Matrix::Identity(2 * n, 2 * n);
  m(k, k) = std::exp(r);
  m(n + k, n + k) = std::exp(-r);
  return {std::move(m), reg};
}

SymplecticTransform sign_flip(const ModeRegister& reg, std::string_view mode) {
  const int k = reg.index_of(mode);
  const int n = reg.n_modes();
  Matrix m = Matrix::Identity(2 * n, 2 * n);
  m(k, k) = -1.0;
  m(n + k, n + k) = -1.0;
  return {std::move(m), reg};
}

SymplecticTransform compose(const SymplecticTransform& first,
                            const SymplecticTransform& then) {
  if (first.mode_register() != then.mode_register()) {
    throw std::invalid_argument("cannot compose transforms on different registers");
  }
  return {then.matrix() * first.matrix(), first.mode_register()};
}

double symplectic_residual(const Matrix& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() % 2 != 0) {
    throw std::invalid_argument(
        "symplectic residual requires a square matrix of even dimension");
  }
  const Matrix omega = symplectic_form(static_cast<int>(matrix.rows()) / 2);
  return (matrix * omega * matrix.transpose() - omega)
      .cwiseAbs()
      .maxCoeff();
}

SymplecticCheck check_symplectic(const SymplecticTransform& transform,
                                 double tol) {
  SymplecticCheck result;
  result.residual = symplectic_residual(transform.matrix());
  result.pass = result.residual <= tol;
  return result;
}

}  // namespace qnd
