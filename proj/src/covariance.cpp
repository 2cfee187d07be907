#include "sympent/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sympent/errors.hpp"

namespace sympent {

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0 || matrix_.rows() % 2 != 0) {
    std::ostringstream msg;
    msg << "covariance matrix must be square with positive even dimension, got " << matrix_.rows() << "x"
        << matrix_.cols();
    throw MalformedInput(msg.str());
  }
  if (!matrix_.allFinite()) throw MalformedInput("covariance matrix has non-finite entries");
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  const double asym = (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol * scale) {
    std::ostringstream msg;
    msg << "covariance matrix is not symmetric (max |G - G^T| = " << asym << ")";
    throw MalformedInput(msg.str());
  }
  // Exact symmetry downstream; the discarded part is below kSymmetryTol.
  matrix_ = 0.5 * (matrix_ + matrix_.transpose()).eval();
}

CovarianceMatrix CovarianceMatrix::vacuum(std::size_t n) {
  if (n == 0) throw InvalidDimension("mode count must be positive");
  const auto dim = static_cast<Eigen::Index>(2 * n);
  return CovarianceMatrix(0.5 * Eigen::MatrixXd::Identity(dim, dim));
}

}  // namespace sympent
