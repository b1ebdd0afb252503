#include "qnd/state.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qnd {
namespace {

double uncertainty_min_eig(const Matrix& cov, int n_modes) {
  const Matrix omega = symplectic_form(n_modes);
  Eigen::MatrixXcd m =
      cov.cast<std::complex<double>>() +
      std::complex<double>(0.0, 0.5) * omega.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

GaussianState::GaussianState(Vector mean, Matrix cov, ModeRegister reg)
    : mean_(std::move(mean)), cov_(std::move(cov)), register_(std::move(reg)) {
  const int d = register_.dim();
  if (mean_.size() != d || cov_.rows() != d || cov_.cols() != d) {
    throw std::invalid_argument("state dimensions do not match register");
  }
  const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
  if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("covariance matrix must be symmetric");
  }
  cov_ = ((cov_ + cov_.transpose()) / 2.0).eval();
  // Tolerance scales with the covariance magnitude: eigensolver noise on
  // strongly squeezed states grows with the matrix norm.
  if (uncertainty_min_eig(cov_, register_.n_modes()) < -1e-10 * scale) {
    throw std::invalid_argument(
        "covariance matrix violates the uncertainty relation");
  }
}

double GaussianState::uncertainty_min_eigenvalue() const {
  return uncertainty_min_eig(cov_, register_.n_modes());
}

GaussianState vacuum(const ModeRegister& reg) {
  const int d = reg.dim();
  return {Vector::Zero(d), vacuum_variance * Matrix::Identity(d, d), reg};
}

GaussianState coherent(const ModeRegister& reg, std::string_view mode,
                       double alpha_c, double alpha_s) {
  const int d = reg.dim();
  Vector mean = Vector::Zero(d);
  mean(reg.cosine_index(mode)) = alpha_c;
  mean(reg.sine_index(mode)) = alpha_s;
  return {std::move(mean), vacuum_variance * Matrix::Identity(d, d), reg};
}

GaussianState apply(const GaussianState& state, const SymplecticTransform& s) {
  if (state.mode_register() != s.mode_register()) {
    throw std::invalid_argument("transform register does not match state");
  }
  return {s.matrix() * state.mean(),
          s.matrix() * state.cov() * s.matrix().transpose(),
          state.mode_register()};
}

GaussianState apply(const GaussianState& state,
                    const GaussianChannel& channel) {
  if (state.mode_register() != channel.mode_register()) {
    throw std::invalid_argument("channel register does not match state");
  }
  const Matrix& x = channel.x_matrix();
  return {x * state.mean(), x * state.cov() * x.transpose() + channel.y_matrix(),
          state.mode_register()};
}

HomodyneResult homodyne_stats(const GaussianState& state,
                              std::string_view mode, double phase) {
  const int ic = state.mode_register().cosine_index(mode);
  const int is = state.mode_register().sine_index(mode);
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  HomodyneResult result;
  result.mode = std::string(mode);
  result.phase = phase;
  result.mean = c * state.mean()(ic) + s * state.mean()(is);
  result.variance = c * c * state.cov()(ic, ic) + s * s * state.cov()(is, is) +
                    2.0 * c * s * state.cov()(ic, is);
  return result;
}

}  // namespace qnd
