#pragma once

// Internal helpers for symmetric positive-definite matrices.

#include <Eigen/Dense>

namespace sympent::detail {

/// Eigendecomposition of a symmetric positive-definite matrix. Throws
/// InvalidState (or the error type E) when lambda_min <= ratio * lambda_max.
struct SpdEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;

  Eigen::MatrixXd power(double exponent) const {
    Eigen::VectorXd d = values.array().pow(exponent);
    return vectors * d.asDiagonal() * vectors.transpose();
  }
};

template <class E>
SpdEigen spd_eigen(const Eigen::MatrixXd& m, double ratio, const char* what) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw E(what);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double top = ev.maxCoeff();
  if (!(top > 0.0) || !(ev.minCoeff() > ratio * top)) throw E(what);
  return {ev, solver.eigenvectors()};
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace sympent::detail
