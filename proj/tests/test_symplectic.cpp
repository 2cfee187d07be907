#include <algorithm>
#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "sympent/errors.hpp"
#include "sympent/gaussian_state.hpp"
#include "sympent/models.hpp"
#include "sympent/symplectic.hpp"
#include "test_support.hpp"

namespace sympent {
namespace {

using testing::max_abs_diff;
using testing::random_state;

Eigen::MatrixXd coupled_normal_mode_matrix() {
  Eigen::MatrixXd s(4, 4);
  s << 1, -1, 0, 0,  //
      1, 1, 0, 0,    //
      0, 0, 1, -1,   //
      0, 0, 1, 1;
  return s / std::sqrt(2.0);
}

// Independent route: |Im| of the eigenvalues of Gamma * Omega from a general
// nonsymmetric eigensolver, one per conjugate pair, descending.
std::vector<double> spectrum_via_gamma_omega(const CovarianceMatrix& gamma) {
  const auto ev = gamma_omega_eigenvalues(gamma);
  std::vector<double> imag;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i).imag() > 0) imag.push_back(ev(i).imag());
  std::sort(imag.begin(), imag.end(), std::greater<>());
  return imag;
}

TEST(SymplecticForm, SingleMode) {
  Eigen::Matrix2d expected;
  expected << 0, 1, -1, 0;
  EXPECT_EQ(symplectic_form(1).matrix(), Eigen::MatrixXd(expected));
}

TEST(SymplecticForm, TwoModeBlocks) {
  const auto omega = symplectic_form(2).matrix();
  EXPECT_EQ(omega.topLeftCorner(2, 2), Eigen::MatrixXd::Zero(2, 2));
  EXPECT_EQ(omega.bottomRightCorner(2, 2), Eigen::MatrixXd::Zero(2, 2));
  EXPECT_EQ(omega.topRightCorner(2, 2), Eigen::MatrixXd::Identity(2, 2));
  EXPECT_EQ(omega.bottomLeftCorner(2, 2), -Eigen::MatrixXd::Identity(2, 2));
}

TEST(SymplecticForm, AlgebraicIdentities) {
  const auto omega = symplectic_form(3).matrix();
  EXPECT_EQ(omega * omega, -Eigen::MatrixXd::Identity(6, 6));
  EXPECT_EQ(omega.transpose(), -omega);
  EXPECT_EQ(omega.transpose() * omega, Eigen::MatrixXd::Identity(6, 6));
}

TEST(SymplecticForm, RejectsZeroModes) { EXPECT_THROW(symplectic_form(0), InvalidDimension); }

TEST(IsSymplectic, IdentityAndNormalModeTransform) {
  EXPECT_TRUE(is_symplectic(Eigen::MatrixXd::Identity(4, 4), 1e-12));
  EXPECT_TRUE(is_symplectic(coupled_normal_mode_matrix(), 1e-12));
}

TEST(IsSymplectic, UniformScalingBreaksMembership) {
  const Eigen::MatrixXd s = 2.0 * Eigen::MatrixXd::Identity(4, 4);
  EXPECT_FALSE(is_symplectic(s, 1e-12));
  EXPECT_DOUBLE_EQ(symplectic_residual(s), 3.0);  // 4 Omega - Omega
}

TEST(IsSymplectic, RejectsOddDimension) {
  EXPECT_THROW(is_symplectic(Eigen::MatrixXd::Identity(3, 3)), InvalidDimension);
  EXPECT_THROW(is_symplectic(Eigen::MatrixXd::Identity(2, 4)), InvalidDimension);
}

TEST(SymplecticSpectrum, VacuumIsHalf) {
  for (std::size_t n : {1u, 2u, 5u}) {
    const auto spectrum = symplectic_spectrum(CovarianceMatrix::vacuum(n));
    ASSERT_EQ(spectrum.size(), n);
    for (double s : spectrum.values) EXPECT_NEAR(s, 0.5, 1e-14);
  }
}

TEST(SymplecticSpectrum, DiagonalSingleMode) {
  const CovarianceMatrix gamma(Eigen::Vector2d(3.0, 0.75).asDiagonal());
  EXPECT_NEAR(symplectic_spectrum(gamma).values.at(0), 1.5, 1e-14);
}

TEST(SymplecticSpectrum, CoupledOscillatorReducedMode) {
  for (double lambda : {0.0, 0.3, 2.0, 11.0}) {
    const double m = 1.7, omega = 0.6;
    const double alpha = std::sqrt(1.0 + 4.0 * lambda / (m * omega * omega));
    Eigen::Vector2d diag((1 + alpha) / (4 * m * alpha * omega), m * (1 + alpha) * omega / 4);
    const CovarianceMatrix gamma1(diag.asDiagonal());
    EXPECT_NEAR(symplectic_spectrum(gamma1).values.at(0), (1 + alpha) / (4 * std::sqrt(alpha)), 1e-12)
        << "lambda=" << lambda;
  }
}

TEST(SymplecticSpectrum, MatchesConstructionAndNonsymmetricRoute) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto state = random_state(3, seed);
    const auto spectrum = symplectic_spectrum(state.gamma);
    const auto other = spectrum_via_gamma_omega(state.gamma);
    ASSERT_EQ(other.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(spectrum.values[i], state.sigmas[i], 1e-9);
      EXPECT_NEAR(other[i], state.sigmas[i], 1e-8);
    }
  }
}

TEST(SymplecticSpectrum, GammaOmegaEigenvaluesArePurelyImaginary) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const auto ev = gamma_omega_eigenvalues(random_state(3, seed).gamma);
    for (Eigen::Index i = 0; i < ev.size(); ++i) EXPECT_LT(std::abs(ev(i).real()), 1e-10);
  }
}

TEST(SymplecticSpectrum, InvariantUnderCongruence) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto state = random_state(3, 1000 + seed);
    const auto s = random_symplectic(3, 5000 + seed);
    const auto before = symplectic_spectrum(state.gamma);
    const auto after = symplectic_spectrum(s.apply(state.gamma));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(before.values[i], after.values[i], 1e-8) << "seed " << seed;
  }
}

TEST(SymplecticSpectrum, RejectsIndefiniteAndSingular) {
  EXPECT_THROW(symplectic_spectrum(CovarianceMatrix(Eigen::Vector2d(1.0, -0.5).asDiagonal())), InvalidState);
  EXPECT_THROW(symplectic_spectrum(CovarianceMatrix(Eigen::Vector2d(1.0, 1e-14).asDiagonal())), InvalidState);
}

TEST(SymplecticSpectrum, AsymmetricInputIsMalformed) {
  Eigen::Matrix2d m;
  m << 1.0, 0.1, 0.0, 1.0;
  EXPECT_THROW(CovarianceMatrix{Eigen::MatrixXd(m)}, MalformedInput);
}

TEST(Williamson, VacuumIsAlreadyNormal) {
  const auto w = williamson(CovarianceMatrix::vacuum(3));
  EXPECT_LT(max_abs_diff(w.normal_form, 0.5 * Eigen::MatrixXd::Identity(6, 6)), 1e-14);
  EXPECT_LT(max_abs_diff(w.transform.matrix(), Eigen::MatrixXd::Identity(6, 6)), 1e-12);
}

TEST(Williamson, DiagonalSingleModeClosedForm) {
  const double a = 2.0, b = 0.125;
  const auto w = williamson(CovarianceMatrix(Eigen::Vector2d(a, b).asDiagonal()));
  const double sigma = std::sqrt(a * b);
  EXPECT_NEAR(w.spectrum.values.at(0), sigma, 1e-14);

  Eigen::Matrix2d expected;
  expected << std::pow(b / a, 0.25), 0, 0, std::pow(a / b, 0.25);
  EXPECT_LT(max_abs_diff(w.transform.matrix(), expected), 1e-12);

  // Direct multiplication of the closed form.
  const Eigen::Matrix2d gamma = Eigen::Vector2d(a, b).asDiagonal();
  EXPECT_LT(max_abs_diff(expected * gamma * expected.transpose(), sigma * Eigen::Matrix2d::Identity()), 1e-14);
  EXPECT_TRUE(is_symplectic(expected, 1e-14));
}

TEST(Williamson, RandomFourModeResiduals) {
  const auto omega = symplectic_form(4).matrix();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto state = random_state(4, 200 + seed);
    const auto w = williamson(state.gamma);
    const auto& s = w.transform.matrix();
    EXPECT_LT(max_abs_diff(s * state.gamma.matrix() * s.transpose(), w.normal_form), 1e-8);
    EXPECT_LT(max_abs_diff(s * omega * s.transpose(), omega), 1e-8);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(w.spectrum.values[i], state.sigmas[i], 1e-9);
  }
}

TEST(Williamson, DegenerateSpectrum) {
  // Two thermal modes with equal sigma mixed by a random symplectic.
  Eigen::VectorXd diag(4);
  diag << 1.2, 1.2, 1.2, 1.2;
  const auto s = random_symplectic(2, 77).matrix();
  const CovarianceMatrix gamma(s * diag.asDiagonal() * s.transpose());
  const auto w = williamson(gamma);
  EXPECT_NEAR(w.spectrum.values[0], 1.2, 1e-10);
  EXPECT_NEAR(w.spectrum.values[1], 1.2, 1e-10);
  EXPECT_LT(symplectic_residual(w.transform.matrix()), 1e-8);
}

TEST(Williamson, SpectrumIsIdempotentOnNormalForm) {
  const auto state = random_state(3, 9);
  const auto w = williamson(state.gamma);
  const auto again = symplectic_spectrum(CovarianceMatrix(w.normal_form));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(again.values[i], w.spectrum.values[i], 1e-12);
}

TEST(Williamson, Deterministic) {
  const auto state = random_state(3, 4);
  EXPECT_EQ(williamson(state.gamma).transform.matrix(), williamson(state.gamma).transform.matrix());
}

TEST(Williamson, RejectsNonPositiveDefinite) {
  EXPECT_THROW(williamson(CovarianceMatrix(Eigen::Vector4d(1, 1, 1, -1).asDiagonal())), InvalidState);
}

TEST(RandomSymplectic, MembershipDeterminismAndDeterminant) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto s = random_symplectic(n, seed);
      EXPECT_TRUE(is_symplectic(s.matrix(), 1e-10));
      EXPECT_NEAR(s.matrix().determinant(), 1.0, 1e-9);
    }
  EXPECT_EQ(random_symplectic(2, 7).matrix(), random_symplectic(2, 7).matrix());
  EXPECT_NE(random_symplectic(2, 7).matrix(), random_symplectic(2, 8).matrix());
  EXPECT_THROW(random_symplectic(0, 1), InvalidDimension);
}

TEST(SymplecticMatrix, ConstructorChecksMembership) {
  EXPECT_THROW(SymplecticMatrix(2.0 * Eigen::MatrixXd::Identity(2, 2)), InvalidState);
  EXPECT_NO_THROW(SymplecticMatrix{coupled_normal_mode_matrix()});
}

TEST(LocalSymplectic, EmbedsBlocksOnTheirModes) {
  const auto sa = random_symplectic(1, 3);
  const auto sb = random_symplectic(2, 4);
  const auto s = local_symplectic(sa, {1}, sb, {0, 2});
  EXPECT_TRUE(is_symplectic(s.matrix(), 1e-10));
  // Mode 1 (q at row 1, p at row 4) only sees its own quadratures.
  EXPECT_DOUBLE_EQ(s.matrix()(1, 1), sa.matrix()(0, 0));
  EXPECT_DOUBLE_EQ(s.matrix()(1, 4), sa.matrix()(0, 1));
  EXPECT_DOUBLE_EQ(s.matrix()(1, 0), 0.0);
  EXPECT_THROW(local_symplectic(sa, {0}, sb, {0, 2}), InvalidPartition);
}

}  // namespace
}  // namespace sympent
