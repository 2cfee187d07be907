#pragma once

#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

#include "sympent/covariance.hpp"
#include "sympent/symplectic.hpp"

namespace sympent {

/// H = p^T p / (2m) + (m/2) q^T V q with uniform mass m.
class QuadraticModel {
 public:
  /// Throws ParameterError for m <= 0 or a non-symmetric V, NoGroundState when
  /// V is not positive definite.
  QuadraticModel(double mass, Eigen::MatrixXd potential);

  std::size_t modes() const noexcept { return static_cast<std::size_t>(potential_.rows()); }
  double mass() const noexcept { return mass_; }
  /// Units of frequency squared.
  const Eigen::MatrixXd& potential() const noexcept { return potential_; }

 private:
  double mass_;
  Eigen::MatrixXd potential_;
};

struct TwoOscillatorParams {
  double m = 1.0;
  double omega = 1.0;
  double lambda = 0.0;

  /// sqrt(1 + 4 lambda / (m omega^2))
  double alpha() const;
};

enum class Boundary { open, periodic };

Boundary parse_boundary(std::string_view text);
std::string_view to_string(Boundary b);

/// Two oscillators coupled by lambda (q1 - q2)^2.
QuadraticModel two_oscillator_model(double m, double omega, double lambda);

/// Nearest-neighbour chain with coupling lambda sum (q_i - q_{i+1})^2.
/// Periodic chains add the (n, 1) bond and need n >= 3.
QuadraticModel chain_model(std::size_t n, double m, double omega, double lambda, Boundary boundary);

/// Gamma = blockdiag(W^-1 / (2m), (m/2) W) with W = V^{1/2}.
CovarianceMatrix ground_state_covariance(const QuadraticModel& model);

/// Normal-mode frequencies sqrt(eig V), ascending.
Eigen::VectorXd normal_frequencies(const QuadraticModel& model);

/// S = O (+) O where the rows of O are the eigenvectors of V (ascending
/// frequency, first nonzero component positive).
SymplecticMatrix normal_mode_transform(const QuadraticModel& model);

}  // namespace sympent
