#include "sympent/fock_oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sympent/errors.hpp"

namespace sympent::fock {
namespace {

void require_beta(double beta) {
  if (!(beta > 0.0)) {
    std::ostringstream msg;
    msg << "thermal parameter beta must be positive, got " << beta;
    throw ParameterError(msg.str());
  }
}

void require_truncation(double beta, std::size_t n_max, double tail) {
  if (tail >= kMaxTailMass) {
    const std::size_t need = required_n_max(beta);
    std::ostringstream msg;
    msg << "truncation at n_max = " << n_max << " leaves tail mass " << tail << " >= " << kMaxTailMass
        << " for beta = " << beta << "; need n_max >= " << need;
    throw TruncationError(msg.str(), need);
  }
}

// -sum p log p in nats over the nonzero entries.
template <class Range>
double shannon_nats(const Range& probabilities) {
  double sum = 0.0;
  for (double p : probabilities)
    if (p > 0.0) sum -= p * std::log(p);
  return sum;
}

}  // namespace

double ThermalSpectrumTruncated::mean() const {
  double sum = 0.0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) sum += static_cast<double>(k) * probabilities[k];
  return sum;
}

ThermalSpectrumTruncated thermal_probabilities(double beta, std::size_t n_max) {
  require_beta(beta);
  if (n_max < 1) throw ParameterError("n_max must be at least 1");
  ThermalSpectrumTruncated out;
  out.beta = beta;
  out.n_max = n_max;
  out.probabilities.resize(n_max + 1);
  const double ground = -std::expm1(-beta);
  for (std::size_t k = 0; k <= n_max; ++k) out.probabilities[k] = ground * std::exp(-static_cast<double>(k) * beta);
  out.tail_mass = std::exp(-static_cast<double>(n_max + 1) * beta);
  return out;
}

std::size_t required_n_max(double beta) {
  require_beta(beta);
  if (std::isinf(beta)) return 1;
  return static_cast<std::size_t>(std::ceil(-std::log(kMaxTailMass) / beta));
}

double beta_for_occupation(double n_bar) {
  if (!(n_bar > 0.0)) {
    std::ostringstream msg;
    msg << "mean occupation must be positive, got " << n_bar;
    throw ParameterError(msg.str());
  }
  return std::log1p(1.0 / n_bar);
}

double thermal_entropy_bruteforce(double beta, std::size_t n_max, LogBase base) {
  const auto spectrum = thermal_probabilities(beta, n_max);
  require_truncation(beta, n_max, spectrum.tail_mass);
  // log p_n = log(1 - e^-beta) - n beta, evaluated without cancellation.
  const double log_ground = std::log1p(-std::exp(-beta));
  double nats = 0.0;
  for (std::size_t k = 0; k <= n_max; ++k) {
    const double p = spectrum.probabilities[k];
    if (p > 0.0) nats -= p * (log_ground - static_cast<double>(k) * beta);
  }
  return from_nats(nats, base);
}

Eigen::MatrixXd TwoModeSqueezedState::amplitudes() const {
  const auto dim = static_cast<Eigen::Index>(schmidt_coefficients.size());
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) psi(k, k) = schmidt_coefficients[static_cast<std::size_t>(k)];
  return psi;
}

Eigen::MatrixXd TwoModeSqueezedState::reduced_density_matrix() const {
  const Eigen::MatrixXd psi = amplitudes();
  return psi * psi.transpose();
}

TwoModeSqueezedState two_mode_squeezed_state(double beta, std::size_t n_max) {
  require_beta(beta);
  if (n_max < 1) throw ParameterError("n_max must be at least 1");
  TwoModeSqueezedState state;
  state.beta = beta;
  state.n_max = n_max;
  state.schmidt_coefficients.resize(n_max + 1);
  const double norm = std::sqrt(-std::expm1(-beta));
  for (std::size_t k = 0; k <= n_max; ++k)
    state.schmidt_coefficients[k] = norm * std::exp(-0.5 * beta * static_cast<double>(k));
  state.tail_mass = std::exp(-static_cast<double>(n_max + 1) * beta);
  return state;
}

double two_mode_squeezed_entropy(double beta, std::size_t n_max, LogBase base) {
  const auto state = two_mode_squeezed_state(beta, n_max);
  require_truncation(beta, n_max, state.tail_mass);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(state.reduced_density_matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalFailure("eigensolver did not converge", 0.0);
  return from_nats(shannon_nats(solver.eigenvalues()), base);
}

std::pair<double, double> quadrature_variances_thermal(double beta) {
  require_beta(beta);
  const double coth = 1.0 / std::tanh(0.5 * beta);
  return {coth, coth};
}

}  // namespace sympent::fock
