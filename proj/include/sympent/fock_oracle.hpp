#pragma once

// Brute-force number-basis checks. Nothing here depends on the symplectic or
// entropy modules; only the log-base helpers are shared.

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sympent/log_base.hpp"

namespace sympent::fock {

/// Tail mass above which entropies are refused.
inline constexpr double kMaxTailMass = 1e-12;

/// p_n = (1 - e^-beta) e^{-n beta} for n = 0..n_max.
struct ThermalSpectrumTruncated {
  double beta = 0.0;
  std::size_t n_max = 0;
  std::vector<double> probabilities;
  /// e^{-(n_max + 1) beta}
  double tail_mass = 0.0;

  double mean() const;
};

ThermalSpectrumTruncated thermal_probabilities(double beta, std::size_t n_max);

/// ceil(-ln(kMaxTailMass) / beta)
std::size_t required_n_max(double beta);

/// Inverse of n_bar = 1 / (e^beta - 1).
double beta_for_occupation(double n_bar);

double thermal_entropy_bruteforce(double beta, std::size_t n_max, LogBase base = LogBase::bits);

/// (1/sqrt Z) sum_n e^{-beta n / 2} |n>|n>, truncated at n_max.
struct TwoModeSqueezedState {
  double beta = 0.0;
  std::size_t n_max = 0;
  std::vector<double> schmidt_coefficients;
  double tail_mass = 0.0;

  /// Dense amplitude matrix psi(n_a, n_b).
  Eigen::MatrixXd amplitudes() const;
  /// rho_A = Tr_B |psi><psi|.
  Eigen::MatrixXd reduced_density_matrix() const;
};

TwoModeSqueezedState two_mode_squeezed_state(double beta, std::size_t n_max);

/// Entropy of one half of the two-mode squeezed state from the spectrum of
/// its partial trace.
double two_mode_squeezed_entropy(double beta, std::size_t n_max, LogBase base = LogBase::bits);

/// (<q^2> 2 m w, <p^2> 2 / (m w)) = (coth(beta/2), coth(beta/2)).
std::pair<double, double> quadrature_variances_thermal(double beta);

}  // namespace sympent::fock
