#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "sympent/entropy.hpp"
#include "sympent/errors.hpp"
#include "sympent/fock_oracle.hpp"

namespace sympent::fock {
namespace {

constexpr double kLn2 = std::numbers::ln2;

TEST(ThermalProbabilities, GeometricAtLn2) {
  const auto spec = thermal_probabilities(kLn2, 50);
  ASSERT_EQ(spec.probabilities.size(), 51u);
  for (std::size_t k = 0; k <= 50; ++k)
    EXPECT_NEAR(spec.probabilities[k], std::ldexp(1.0, -static_cast<int>(k + 1)), 1e-16);
  EXPECT_NEAR(spec.tail_mass, std::ldexp(1.0, -51), 1e-14 * std::ldexp(1.0, -51));
}

TEST(ThermalProbabilities, MeanOccupation) {
  EXPECT_NEAR(thermal_probabilities(kLn2, 100).mean(), 1.0, 1e-12);
  const double beta = beta_for_occupation(0.3);
  EXPECT_NEAR(thermal_probabilities(beta, required_n_max(beta)).mean(), 0.3, 1e-11);
}

TEST(ThermalProbabilities, NormalizedWithTail) {
  for (double beta : {0.05, 0.3, 1.0, 4.0}) {
    const auto spec = thermal_probabilities(beta, required_n_max(beta));
    const double sum = std::accumulate(spec.probabilities.begin(), spec.probabilities.end(), 0.0);
    EXPECT_NEAR(sum + spec.tail_mass, 1.0, 1e-14) << beta;
    EXPECT_LT(spec.tail_mass, kMaxTailMass);
  }
}

TEST(ThermalProbabilities, ParameterChecks) {
  EXPECT_THROW(thermal_probabilities(0.0, 10), ParameterError);
  EXPECT_THROW(thermal_probabilities(-1.0, 10), ParameterError);
  EXPECT_THROW(thermal_probabilities(1.0, 0), ParameterError);
  EXPECT_THROW(beta_for_occupation(0.0), ParameterError);
}

TEST(BruteForce, TwoBitsAtLn2) {
  EXPECT_NEAR(thermal_entropy_bruteforce(kLn2, 100), 2.0, 1e-13);
  EXPECT_NEAR(thermal_entropy_bruteforce(kLn2, 100, LogBase::nats), 2.0 * kLn2, 1e-13);
}

TEST(BruteForce, RefusesShortTruncation) {
  try {
    thermal_entropy_bruteforce(kLn2, 10);
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.required_n_max(), 40u);
  }
  EXPECT_EQ(required_n_max(kLn2), 40u);
  EXPECT_NO_THROW(thermal_entropy_bruteforce(kLn2, 40));
}

TEST(BruteForce, NearGroundState) {
  EXPECT_LT(thermal_entropy_bruteforce(40.0, 5), 1e-15);
}

TEST(BruteForce, MatchesClosedForm) {
  for (int k = 1; k <= 6; ++k) {
    const double sigma = 0.5 + std::pow(10.0, -k);
    const double beta = thermal_parameter(sigma);
    EXPECT_NEAR(thermal_entropy_bruteforce(beta, required_n_max(beta)), mode_entropy(sigma), 1e-10) << sigma;
  }
  for (double sigma : {0.6, 1.0 / std::sqrt(3.0), 1.5, 3.0, 10.0}) {
    const double beta = thermal_parameter(sigma);
    EXPECT_NEAR(thermal_entropy_bruteforce(beta, required_n_max(beta)), mode_entropy(sigma), 1e-10) << sigma;
  }
}

TEST(TwoModeSqueezed, ReducedStateIsThermal) {
  const auto state = two_mode_squeezed_state(0.7, 60);
  const Eigen::MatrixXd rho = state.reduced_density_matrix();
  const auto thermal = thermal_probabilities(0.7, 60);
  for (Eigen::Index k = 0; k <= 60; ++k) EXPECT_NEAR(rho(k, k), thermal.probabilities[static_cast<std::size_t>(k)], 1e-15);
  EXPECT_NEAR(rho.trace() + state.tail_mass, 1.0, 1e-14);
}

TEST(TwoModeSqueezed, EntropyAgreesWithThermalAndClosedForm) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> draw(0.05, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double beta = draw(rng);
    const std::size_t n_max = required_n_max(beta);
    const double two_mode = two_mode_squeezed_entropy(beta, n_max);
    EXPECT_NEAR(two_mode, thermal_entropy_bruteforce(beta, n_max), 1e-10) << beta;
    const double sigma = 0.5 / std::tanh(0.5 * beta);
    EXPECT_NEAR(two_mode, mode_entropy(sigma), 1e-9) << beta;
  }
}

TEST(QuadratureVariances, CothOfHalfBeta) {
  const auto [q, p] = quadrature_variances_thermal(kLn2);
  EXPECT_NEAR(q, 3.0, 1e-14);
  EXPECT_NEAR(p, 3.0, 1e-14);
  EXPECT_NEAR(quadrature_variances_thermal(60.0).first, 1.0, 1e-15);
  for (double beta : {0.1, 0.9, 2.5}) {
    const double n_bar = thermal_probabilities(beta, required_n_max(beta)).mean();
    // The truncated mean misses about (n_max + 1/beta) * tail of the occupation.
    EXPECT_NEAR(quadrature_variances_thermal(beta).first, 2 * (n_bar + 0.5), 1e-9);
  }
}

}  // namespace
}  // namespace sympent::fock
