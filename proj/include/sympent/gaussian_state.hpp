#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sympent/covariance.hpp"

namespace sympent {

/// Disjoint split of the modes {0..n-1} into two nonempty sets.
///
/// Indices are 0-based in memory; the text form "1,2|3,4" is 1-based and must
/// list both sides explicitly.
class ModePartition {
 public:
  ModePartition(std::size_t n, std::vector<std::size_t> set_a, std::vector<std::size_t> set_b);

  /// Partition with set_a given and set_b its complement.
  static ModePartition complement_of(std::size_t n, std::vector<std::size_t> set_a);

  /// Parses "i,j,..|k,l,..". Throws InvalidPartition.
  static ModePartition parse(std::string_view text, std::size_t n);

  std::size_t modes() const noexcept { return n_; }
  const std::vector<std::size_t>& set_a() const noexcept { return a_; }
  const std::vector<std::size_t>& set_b() const noexcept { return b_; }

  ModePartition swapped() const { return ModePartition(n_, b_, a_); }

  /// 1-based text form, inverse of parse().
  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<std::size_t> a_;
  std::vector<std::size_t> b_;
};

struct ValidityReport {
  bool valid = false;
  /// Smallest eigenvalue of the Hermitian matrix Gamma + (i/2) Omega.
  double min_uncertainty_eigenvalue = 0.0;
  /// Smallest symplectic eigenvalue; empty when Gamma is not positive definite.
  std::optional<double> min_sigma;
};

/// Physicality test Gamma + (i/2) Omega >= -tol.
ValidityReport validate(const CovarianceMatrix& gamma, double tol = kDefaultTol);

/// Same test on a raw matrix; throws MalformedInput for bad shape or asymmetry.
ValidityReport validate(const Eigen::MatrixXd& gamma, double tol = kDefaultTol);

/// Rows and columns {q_i, p_i : i in keep} in the order given by keep.
CovarianceMatrix reduce(const CovarianceMatrix& gamma, std::span<const std::size_t> keep);

/// Phase-space point X = (q_1..q_n, p_1..p_n).
using PhasePoint = Eigen::VectorXd;

/// chi(eta) = exp(-1/4 eta^T Omega Gamma Omega^T eta) for zero first moments.
double characteristic_function(const CovarianceMatrix& gamma, const PhasePoint& eta);

/// W(x) = (2 pi)^-n det(Gamma)^-1/2 exp(-1/2 x^T Gamma^-1 x).
///
/// Normalized to unit integral with the vacuum at 0.5 * I. The characteristic
/// function above pairs with it through
///   W(X) = (2 pi)^-2n 2^-n  Int d^2n eta  exp(i eta^T Omega X / sqrt 2) chi(eta).
double wigner_function(const CovarianceMatrix& gamma, const PhasePoint& x);

/// Precomputed inverse and normalization for evaluating W on many points.
class WignerEvaluator {
 public:
  explicit WignerEvaluator(const CovarianceMatrix& gamma);
  double operator()(const PhasePoint& x) const;
  double peak() const noexcept { return prefactor_; }

 private:
  Eigen::MatrixXd inverse_;
  double prefactor_;
};

}  // namespace sympent
