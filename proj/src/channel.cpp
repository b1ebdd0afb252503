#include "qnd/channel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qnd {

GaussianChannel::GaussianChannel(Matrix x, Matrix y, ModeRegister reg)
    : x_(std::move(x)), y_(std::move(y)), register_(std::move(reg)) {
  const int d = register_.dim();
  if (x_.rows() != d || x_.cols() != d || y_.rows() != d || y_.cols() != d) {
    throw std::invalid_argument("channel matrices must be dim x dim");
  }
  if ((y_ - y_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("channel noise matrix must be symmetric");
  }
  y_ = ((y_ + y_.transpose()) / 2.0).eval();
}

GaussianChannel GaussianChannel::from_transform(const SymplecticTransform& s) {
  const int d = s.mode_register().dim();
  return {s.matrix(), Matrix::Zero(d, d), s.mode_register()};
}

GaussianChannel loss_channel(const ModeRegister& reg, std::string_view mode,
                             double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("loss transmission eta must lie in [0, 1]");
  }
  const int k = reg.index_of(mode);
  const int n = reg.n_modes();
  Matrix x = Matrix::Identity(2 * n, 2 * n);
  Matrix y = Matrix::Zero(2 * n, 2 * n);
  const double amp = std::sqrt(eta);
  x(k, k) = amp;
  x(n + k, n + k) = amp;
  y(k, k) = (1.0 - eta) * vacuum_variance;
  y(n + k, n + k) = (1.0 - eta) * vacuum_variance;
  return {std::move(x), std::move(y), reg};
}

GaussianChannel compose(const GaussianChannel& first,
                        const GaussianChannel& then) {
  if (first.mode_register() != then.mode_register()) {
    throw std::invalid_argument("cannot compose channels on different registers");
  }
  Matrix x = then.x_matrix() * first.x_matrix();
  Matrix y = then.x_matrix() * first.y_matrix() * then.x_matrix().transpose() +
             then.y_matrix();
  return {std::move(x), std::move(y), first.mode_register()};
}

double complete_positivity_min_eigenvalue(const GaussianChannel& channel) {
  const int n = channel.mode_register().n_modes();
  const Matrix omega = symplectic_form(n);
  const Matrix defect =
      omega - channel.x_matrix() * omega * channel.x_matrix().transpose();
  Eigen::MatrixXcd m =
      channel.y_matrix().cast<std::complex<double>>() +
      std::complex<double>(0.0, 0.5) * defect.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  return solver.eigenvalues().minCoeff();
}

}  // namespace qnd
