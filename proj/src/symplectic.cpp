#include "sympent/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "linalg.hpp"
#include "sympent/errors.hpp"

namespace sympent {
namespace {

using cd = std::complex<double>;

Eigen::Index checked_dimension(const Eigen::MatrixXd& s) {
  if (s.rows() != s.cols() || s.rows() == 0 || s.rows() % 2 != 0) {
    std::ostringstream msg;
    msg << "expected a square matrix of positive even dimension, got " << s.rows() << "x" << s.cols();
    throw InvalidDimension(msg.str());
  }
  return s.rows();
}

Eigen::MatrixXd omega_matrix(Eigen::Index n) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n).setIdentity();
  omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return omega;
}

// Pieces shared by the spectrum and the Williamson transform.
struct HermitianForm {
  detail::SpdEigen gamma_eigen;
  Eigen::MatrixXd root;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
};

HermitianForm hermitian_form(const CovarianceMatrix& gamma) {
  const auto n = static_cast<Eigen::Index>(gamma.modes());
  auto eig = detail::spd_eigen<InvalidState>(gamma.matrix(), kSingularRatio,
                                             "covariance matrix is not positive definite");
  Eigen::MatrixXd root = eig.power(0.5);
  Eigen::MatrixXd antisym = root * omega_matrix(n) * root;
  antisym = 0.5 * (antisym - antisym.transpose()).eval();
  Eigen::MatrixXcd herm = cd(0.0, 1.0) * antisym.cast<cd>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  if (solver.info() != Eigen::Success) throw NumericalFailure("Hermitian eigensolver did not converge", 0.0);
  return {std::move(eig), std::move(root), std::move(solver)};
}

// Symplectic eigenvalues closer than this (relative) share one eigenspace.
constexpr double kDegenerateRatio = 1e-10;

// Basis of span(vectors) that depends only on the span: Gram-Schmidt over the
// columns of the projector onto it, taken in index order. Each vector is
// phased so its leading component is positive imaginary, which makes the
// real q-direction row lead with a positive entry.
Eigen::MatrixXcd canonical_basis(const Eigen::MatrixXcd& vectors) {
  const Eigen::Index dim = vectors.rows();
  const Eigen::Index d = vectors.cols();
  const Eigen::MatrixXcd projector = vectors * vectors.adjoint();
  Eigen::MatrixXcd basis(dim, d);
  Eigen::Index found = 0;
  for (Eigen::Index j = 0; j < dim && found < d; ++j) {
    Eigen::VectorXcd candidate = projector.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index k = 0; k < found; ++k) candidate -= basis.col(k) * basis.col(k).dot(candidate);
    const double norm = candidate.norm();
    if (norm < 1e-3) continue;
    candidate /= norm;
    const double cutoff = 1e-6 * candidate.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < dim; ++i)
      if (std::abs(candidate(i)) > cutoff) {
        candidate *= cd(0.0, 1.0) * std::conj(candidate(i)) / std::abs(candidate(i));
        break;
      }
    basis.col(found++) = candidate;
  }
  if (found < d) throw NumericalFailure("could not build an orthonormal eigenbasis", static_cast<double>(d - found));
  return basis;
}

}  // namespace

SymplecticForm::SymplecticForm(std::size_t n) : n_(n) {
  if (n == 0) throw InvalidDimension("mode count must be positive");
  matrix_ = omega_matrix(static_cast<Eigen::Index>(n));
}

SymplecticForm symplectic_form(std::size_t n) { return SymplecticForm(n); }

SymplecticMatrix::SymplecticMatrix(Eigen::MatrixXd matrix, double tol) : matrix_(std::move(matrix)) {
  const double residual = symplectic_residual(matrix_);
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "matrix is not symplectic (|S Omega S^T - Omega|_max = " << residual << ")";
    throw InvalidState(msg.str());
  }
}

CovarianceMatrix SymplecticMatrix::apply(const CovarianceMatrix& gamma) const {
  if (gamma.modes() != modes()) throw InvalidDimension("symplectic matrix and covariance mode counts differ");
  return CovarianceMatrix(matrix_ * gamma.matrix() * matrix_.transpose());
}

double SymplecticSpectrum::min() const {
  if (values.empty()) throw InvalidDimension("empty spectrum");
  return *std::min_element(values.begin(), values.end());
}

double SymplecticSpectrum::max() const {
  if (values.empty()) throw InvalidDimension("empty spectrum");
  return *std::max_element(values.begin(), values.end());
}

double symplectic_residual(const Eigen::MatrixXd& s) {
  const Eigen::Index dim = checked_dimension(s);
  const Eigen::MatrixXd omega = omega_matrix(dim / 2);
  return detail::max_abs(s * omega * s.transpose() - omega);
}

bool is_symplectic(const Eigen::MatrixXd& s, double tol) { return symplectic_residual(s) <= tol; }

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& gamma) {
  const auto n = static_cast<Eigen::Index>(gamma.modes());
  const auto form = hermitian_form(gamma);
  // Eigenvalues come as +-sigma; the upper half, ascending, holds the sigmas.
  const Eigen::VectorXd& ev = form.solver.eigenvalues();
  SymplecticSpectrum out;
  out.values.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 2 * n - 1; k >= n; --k) out.values.push_back(ev(k));
  return out;
}

Eigen::VectorXcd gamma_omega_eigenvalues(const CovarianceMatrix& gamma) {
  const auto n = static_cast<Eigen::Index>(gamma.modes());
  Eigen::EigenSolver<Eigen::MatrixXd> solver(gamma.matrix() * omega_matrix(n), false);
  if (solver.info() != Eigen::Success) throw NumericalFailure("eigensolver did not converge", 0.0);
  return solver.eigenvalues();
}

WilliamsonDecomposition williamson(const CovarianceMatrix& gamma, double tol) {
  const auto n = static_cast<Eigen::Index>(gamma.modes());
  const auto form = hermitian_form(gamma);
  const Eigen::VectorXd& ev = form.solver.eigenvalues();
  const Eigen::MatrixXcd& vecs = form.solver.eigenvectors();

  // Upper half of the Hermitian spectrum, descending: the +sigma eigenvectors.
  Eigen::VectorXd sigma(n);
  Eigen::MatrixXcd plus(2 * n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sigma(k) = ev(2 * n - 1 - k);
    plus.col(k) = vecs.col(2 * n - 1 - k);
  }

  // Rows 0..n-1 of the orthogonal matrix are the q-directions u_k, rows
  // n..2n-1 the p-directions w_k, with A u_k = -sigma_k w_k, A w_k = sigma_k u_k.
  Eigen::MatrixXd ortho(2 * n, 2 * n);
  for (Eigen::Index first = 0; first < n;) {
    Eigen::Index last = first + 1;
    while (last < n && sigma(last - 1) - sigma(last) <= kDegenerateRatio * std::max(1.0, sigma(first))) ++last;
    const Eigen::Index d = last - first;
    const auto basis = canonical_basis(plus.middleCols(first, d));
    for (Eigen::Index k = 0; k < d; ++k) {
      const Eigen::VectorXcd& v = basis.col(k);
      ortho.row(first + k) = std::sqrt(2.0) * v.imag().transpose();
      ortho.row(n + first + k) = std::sqrt(2.0) * v.real().transpose();
    }
    first = last;
  }

  Eigen::VectorXd scale_diag(2 * n);
  scale_diag << sigma.cwiseSqrt(), sigma.cwiseSqrt();
  const Eigen::MatrixXd inv_root = form.gamma_eigen.power(-0.5);
  Eigen::MatrixXd transform = scale_diag.asDiagonal() * ortho * inv_root;

  Eigen::VectorXd normal_diag(2 * n);
  normal_diag << sigma, sigma;
  Eigen::MatrixXd normal_form = normal_diag.asDiagonal();

  const double scale = std::max(1.0, detail::max_abs(gamma.matrix()));
  const double congruence = detail::max_abs(transform * gamma.matrix() * transform.transpose() - normal_form);
  const double membership = symplectic_residual(transform);
  const double worst = std::max(congruence, membership);
  if (!(worst <= tol * scale)) {
    std::ostringstream msg;
    msg << "Williamson transform residual " << worst << " exceeds tolerance " << tol * scale;
    throw NumericalFailure(msg.str(), worst);
  }

  SymplecticSpectrum spectrum;
  spectrum.values.assign(sigma.data(), sigma.data() + n);
  return {std::move(spectrum), SymplecticMatrix(std::move(transform), tol * scale), std::move(normal_form)};
}

SymplecticMatrix random_symplectic(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidDimension("mode count must be positive");
  const auto m = static_cast<Eigen::Index>(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  Eigen::MatrixXd k(2 * m, 2 * m);
  for (Eigen::Index i = 0; i < 2 * m; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) k(i, j) = k(j, i) = 0.3 * normal(rng);
  Eigen::MatrixXd hamiltonian = omega_matrix(m) * k;
  Eigen::MatrixXd squeeze = hamiltonian.exp();

  // Orthosymplectic [[X, -Y], [Y, X]] from a random unitary X + iY.
  Eigen::MatrixXcd z(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) z(i, j) = cd(normal(rng), normal(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd unitary = qr.householderQ();
  Eigen::MatrixXd rotation(2 * m, 2 * m);
  rotation << unitary.real(), -unitary.imag(), unitary.imag(), unitary.real();

  return SymplecticMatrix(squeeze * rotation, 1e-10);
}

SymplecticMatrix local_symplectic(const SymplecticMatrix& s_a, const std::vector<std::size_t>& modes_a,
                                  const SymplecticMatrix& s_b, const std::vector<std::size_t>& modes_b) {
  if (s_a.modes() != modes_a.size() || s_b.modes() != modes_b.size())
    throw InvalidDimension("local symplectic blocks do not match their mode lists");
  const std::size_t n = modes_a.size() + modes_b.size();
  std::vector<bool> seen(n, false);
  for (auto list : {&modes_a, &modes_b})
    for (std::size_t mode : *list) {
      if (mode >= n || seen[mode]) throw InvalidPartition("mode lists must be disjoint and cover 0..n-1");
      seen[mode] = true;
    }

  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  auto embed = [&](const Eigen::MatrixXd& block, const std::vector<std::size_t>& modes) {
    const std::size_t k = modes.size();
    auto global = [&](std::size_t local) { return local < k ? modes[local] : n + modes[local - k]; };
    for (std::size_t i = 0; i < 2 * k; ++i)
      for (std::size_t j = 0; j < 2 * k; ++j)
        full(static_cast<Eigen::Index>(global(i)), static_cast<Eigen::Index>(global(j))) =
            block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };
  embed(s_a.matrix(), modes_a);
  embed(s_b.matrix(), modes_b);
  return SymplecticMatrix(std::move(full));
}

SymplecticMatrix mode_permutation(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  if (n == 0) throw InvalidDimension("mode count must be positive");
  std::vector<bool> seen(n, false);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || seen[perm[i]]) throw InvalidPartition("not a permutation");
    seen[perm[i]] = true;
    const auto row = static_cast<Eigen::Index>(i);
    const auto col = static_cast<Eigen::Index>(perm[i]);
    const auto offset = static_cast<Eigen::Index>(n);
    p(row, col) = 1.0;
    p(offset + row, offset + col) = 1.0;
  }
  return SymplecticMatrix(std::move(p));
}

}  // namespace sympent
