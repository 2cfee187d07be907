#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace sympent {

/// Default absolute tolerance for residual checks (max-abs entry).
inline constexpr double kDefaultTol = 1e-8;

/// Symmetry tolerance applied when a covariance matrix is constructed.
inline constexpr double kSymmetryTol = 1e-12;

/// Second moments of the quadratures of an n-mode zero-mean state.
///
/// Ordering is qqpp: r = (q_1..q_n, p_1..p_n). Units have hbar = 1, so the
/// vacuum is 0.5 * I. Construction checks shape and symmetry only; physicality
/// is reported by validate().
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Eigen::MatrixXd matrix);

  static CovarianceMatrix vacuum(std::size_t n);

  std::size_t modes() const noexcept { return static_cast<std::size_t>(matrix_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }

  Eigen::MatrixXd qq() const { return matrix_.topLeftCorner(modes(), modes()); }
  Eigen::MatrixXd pp() const { return matrix_.bottomRightCorner(modes(), modes()); }

  double operator()(Eigen::Index i, Eigen::Index j) const { return matrix_(i, j); }

 private:
  Eigen::MatrixXd matrix_;
};

}  // namespace sympent
