#include "sympent/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "linalg.hpp"
#include "sympent/errors.hpp"

namespace sympent {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite, got " << value;
    throw ParameterError(msg.str());
  }
}

void require_coupling(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    std::ostringstream msg;
    msg << "lambda must be nonnegative and finite, got " << lambda;
    throw ParameterError(msg.str());
  }
}

detail::SpdEigen potential_eigen(const QuadraticModel& model) {
  return detail::spd_eigen<NoGroundState>(model.potential(), kSingularRatio,
                                          "potential matrix is not positive definite: no normalizable ground state");
}

}  // namespace

QuadraticModel::QuadraticModel(double mass, Eigen::MatrixXd potential) : mass_(mass), potential_(std::move(potential)) {
  require_positive(mass_, "mass");
  if (potential_.rows() != potential_.cols() || potential_.rows() == 0)
    throw ParameterError("potential matrix must be square and nonempty");
  if (!potential_.allFinite()) throw ParameterError("potential matrix has non-finite entries");
  const double scale = std::max(1.0, detail::max_abs(potential_));
  if (detail::max_abs(potential_ - potential_.transpose()) > kSymmetryTol * scale)
    throw ParameterError("potential matrix is not symmetric");
  potential_ = 0.5 * (potential_ + potential_.transpose()).eval();
  potential_eigen(*this);
}

double TwoOscillatorParams::alpha() const {
  require_positive(m, "mass");
  require_positive(omega, "omega");
  require_coupling(lambda);
  return std::sqrt(1.0 + 4.0 * lambda / (m * omega * omega));
}

Boundary parse_boundary(std::string_view text) {
  if (text == "open") return Boundary::open;
  if (text == "periodic") return Boundary::periodic;
  throw ParameterError("boundary must be 'open' or 'periodic', got '" + std::string(text) + "'");
}

std::string_view to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

QuadraticModel two_oscillator_model(double m, double omega, double lambda) {
  return chain_model(2, m, omega, lambda, Boundary::open);
}

QuadraticModel chain_model(std::size_t n, double m, double omega, double lambda, Boundary boundary) {
  require_positive(m, "mass");
  require_positive(omega, "omega");
  require_coupling(lambda);
  if (n < 2) throw ParameterError("a chain needs at least 2 sites");
  if (boundary == Boundary::periodic && n < 3) throw ParameterError("a periodic chain needs at least 3 sites");

  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(size, size);
  auto bond = [&laplacian](Eigen::Index i, Eigen::Index j) {
    laplacian(i, i) += 1.0;
    laplacian(j, j) += 1.0;
    laplacian(i, j) -= 1.0;
    laplacian(j, i) -= 1.0;
  };
  for (Eigen::Index i = 0; i + 1 < size; ++i) bond(i, i + 1);
  if (boundary == Boundary::periodic) bond(size - 1, 0);

  Eigen::MatrixXd potential = omega * omega * Eigen::MatrixXd::Identity(size, size) + (2.0 * lambda / m) * laplacian;
  return QuadraticModel(m, std::move(potential));
}

CovarianceMatrix ground_state_covariance(const QuadraticModel& model) {
  const auto eig = potential_eigen(model);
  const auto n = static_cast<Eigen::Index>(model.modes());
  const double m = model.mass();
  Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  gamma.topLeftCorner(n, n) = eig.power(-0.5) / (2.0 * m);
  gamma.bottomRightCorner(n, n) = (0.5 * m) * eig.power(0.5);
  return CovarianceMatrix(std::move(gamma));
}

Eigen::VectorXd normal_frequencies(const QuadraticModel& model) { return potential_eigen(model).values.cwiseSqrt(); }

SymplecticMatrix normal_mode_transform(const QuadraticModel& model) {
  const auto eig = potential_eigen(model);
  const auto n = static_cast<Eigen::Index>(model.modes());
  Eigen::MatrixXd rows = eig.vectors.transpose();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double cutoff = 1e-12 * rows.row(k).cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(rows(k, i)) > cutoff) {
        if (rows(k, i) < 0.0) rows.row(k) *= -1.0;
        break;
      }
    }
  }
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  s.topLeftCorner(n, n) = rows;
  s.bottomRightCorner(n, n) = rows;
  return SymplecticMatrix(std::move(s));
}

}  // namespace sympent
