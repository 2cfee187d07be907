#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sympent/covariance.hpp"

namespace sympent {

/// Omega = [[0, I_n], [-I_n, 0]] in qqpp ordering.
class SymplecticForm {
 public:
  explicit SymplecticForm(std::size_t n);

  std::size_t modes() const noexcept { return n_; }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }

 private:
  std::size_t n_;
  Eigen::MatrixXd matrix_;
};

SymplecticForm symplectic_form(std::size_t n);

/// A 2n x 2n real matrix known to satisfy S Omega S^T = Omega.
class SymplecticMatrix {
 public:
  /// Throws InvalidState when the membership residual exceeds tol.
  explicit SymplecticMatrix(Eigen::MatrixXd matrix, double tol = kDefaultTol);

  std::size_t modes() const noexcept { return static_cast<std::size_t>(matrix_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }

  /// Congruence S Gamma S^T.
  CovarianceMatrix apply(const CovarianceMatrix& gamma) const;

 private:
  Eigen::MatrixXd matrix_;
};

/// Symplectic eigenvalues sorted descending.
struct SymplecticSpectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double min() const;
  double max() const;
};

struct WilliamsonDecomposition {
  SymplecticSpectrum spectrum;
  SymplecticMatrix transform;
  /// diag(sigma_1..sigma_n, sigma_1..sigma_n)
  Eigen::MatrixXd normal_form;
};

/// Max-abs entry of S Omega S^T - Omega. Throws InvalidDimension for odd or
/// non-square input.
double symplectic_residual(const Eigen::MatrixXd& s);

bool is_symplectic(const Eigen::MatrixXd& s, double tol = kDefaultTol);

/// Positive-definiteness gate shared by the spectral routines: the smallest
/// eigenvalue must exceed kSingularRatio times the largest.
inline constexpr double kSingularRatio = 1e-12;

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& gamma);

/// Eigenvalues of Gamma * Omega computed with a general (nonsymmetric)
/// eigensolver. Diagnostic only; the spectrum routines do not use it.
Eigen::VectorXcd gamma_omega_eigenvalues(const CovarianceMatrix& gamma);

/// Williamson normal form S_w Gamma S_w^T = diag(sigma, sigma).
///
/// The transform is built from the Hermitian matrix i * Gamma^{1/2} Omega
/// Gamma^{1/2}: each eigenvector v for +sigma_k gives the orthonormal pair
/// (Im v, Re v) * sqrt(2) that brings the antisymmetric matrix to canonical
/// block form. Inside each (near-)degenerate eigenspace the basis is rebuilt
/// from the eigenspace projector in index order, so the result depends only on
/// Gamma: an already-diagonal Gamma gets a diagonal transform (the vacuum gets
/// the identity). Throws NumericalFailure if either residual exceeds tol
/// scaled by max(1, |Gamma|_max).
WilliamsonDecomposition williamson(const CovarianceMatrix& gamma, double tol = kDefaultTol);

/// Deterministic random symplectic matrix exp(Omega K) with K symmetric,
/// composed with a random orthosymplectic rotation.
SymplecticMatrix random_symplectic(std::size_t n, std::uint64_t seed);

/// S_a (+) S_b acting on the mode sets a and b (0-based, disjoint, covering
/// all modes). Used for local operations that do not mix the two sides.
SymplecticMatrix local_symplectic(const SymplecticMatrix& s_a, const std::vector<std::size_t>& modes_a,
                                  const SymplecticMatrix& s_b, const std::vector<std::size_t>& modes_b);

/// Joint permutation of the q and p blocks: mode perm[i] moves to slot i.
SymplecticMatrix mode_permutation(const std::vector<std::size_t>& perm);

}  // namespace sympent
