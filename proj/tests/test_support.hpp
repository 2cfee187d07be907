#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "sympent/covariance.hpp"
#include "sympent/symplectic.hpp"

namespace sympent::testing {

/// Known symplectic spectrum plus the state built from it.
struct ConstructedState {
  std::vector<double> sigmas;  // descending
  CovarianceMatrix gamma;
};

/// Gamma = S diag(sigma, sigma) S^T with sigma drawn from [lo, hi].
inline ConstructedState random_state(std::size_t n, std::uint64_t seed, double lo = 0.5, double hi = 3.0) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> draw(lo, hi);
  std::vector<double> sigmas(n);
  for (auto& s : sigmas) s = draw(rng);
  std::sort(sigmas.begin(), sigmas.end(), std::greater<>());
  Eigen::VectorXd diag(2 * n);
  for (std::size_t i = 0; i < n; ++i) diag(i) = diag(n + i) = sigmas[i];
  const auto s = random_symplectic(n, seed).matrix();
  return {sigmas, CovarianceMatrix(s * diag.asDiagonal() * s.transpose())};
}

inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace sympent::testing
