#include "sympent/gaussian_state.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "linalg.hpp"
#include "sympent/errors.hpp"
#include "sympent/symplectic.hpp"

namespace sympent {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::size_t> parse_side(std::string_view side, std::string_view full) {
  std::vector<std::size_t> out;
  side = trim(side);
  if (side.empty()) throw InvalidPartition("empty side in partition '" + std::string(full) + "'");
  while (true) {
    const auto comma = side.find(',');
    const std::string_view token = trim(side.substr(0, comma));
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value == 0)
      throw InvalidPartition("bad mode index '" + std::string(token) + "' in partition '" + std::string(full) +
                             "' (indices are 1-based)");
    out.push_back(value - 1);
    if (comma == std::string_view::npos) break;
    side.remove_prefix(comma + 1);
  }
  return out;
}

void check_phase_point(const CovarianceMatrix& gamma, const PhasePoint& x) {
  if (static_cast<std::size_t>(x.size()) != 2 * gamma.modes()) {
    std::ostringstream msg;
    msg << "phase-space point has length " << x.size() << ", expected " << 2 * gamma.modes();
    throw InvalidDimension(msg.str());
  }
}

}  // namespace

ModePartition::ModePartition(std::size_t n, std::vector<std::size_t> set_a, std::vector<std::size_t> set_b)
    : n_(n), a_(std::move(set_a)), b_(std::move(set_b)) {
  if (a_.empty() || b_.empty()) throw InvalidPartition("both sides of a partition must be nonempty");
  std::vector<int> count(n_, 0);
  for (auto* side : {&a_, &b_})
    for (std::size_t mode : *side) {
      if (mode >= n_) {
        std::ostringstream msg;
        msg << "mode " << mode + 1 << " out of range 1.." << n_;
        throw InvalidPartition(msg.str());
      }
      if (++count[mode] > 1) {
        std::ostringstream msg;
        msg << "mode " << mode + 1 << " appears more than once";
        throw InvalidPartition(msg.str());
      }
    }
  for (std::size_t i = 0; i < n_; ++i)
    if (count[i] == 0) {
      std::ostringstream msg;
      msg << "mode " << i + 1 << " is missing from the partition";
      throw InvalidPartition(msg.str());
    }
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
}

ModePartition ModePartition::complement_of(std::size_t n, std::vector<std::size_t> set_a) {
  std::vector<bool> in_a(n, false);
  for (std::size_t mode : set_a)
    if (mode < n) in_a[mode] = true;
  std::vector<std::size_t> set_b;
  for (std::size_t i = 0; i < n; ++i)
    if (!in_a[i]) set_b.push_back(i);
  return ModePartition(n, std::move(set_a), std::move(set_b));
}

ModePartition ModePartition::parse(std::string_view text, std::size_t n) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw InvalidPartition("partition must look like 'i,j,..|k,l,..', got '" + std::string(text) + "'");
  return ModePartition(n, parse_side(text.substr(0, bar), text), parse_side(text.substr(bar + 1), text));
}

std::string ModePartition::to_string() const {
  std::ostringstream out;
  auto emit = [&out](const std::vector<std::size_t>& side) {
    for (std::size_t i = 0; i < side.size(); ++i) out << (i ? "," : "") << side[i] + 1;
  };
  emit(a_);
  out << '|';
  emit(b_);
  return out.str();
}

ValidityReport validate(const CovarianceMatrix& gamma, double tol) {
  using cd = std::complex<double>;
  const auto n = gamma.modes();
  const Eigen::MatrixXd omega = symplectic_form(n).matrix();
  const Eigen::MatrixXcd uncertainty = gamma.matrix().cast<cd>() + cd(0.0, 0.5) * omega.cast<cd>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(uncertainty, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalFailure("Hermitian eigensolver did not converge", 0.0);

  ValidityReport report;
  report.min_uncertainty_eigenvalue = solver.eigenvalues().minCoeff();
  report.valid = report.min_uncertainty_eigenvalue >= -tol;
  try {
    report.min_sigma = symplectic_spectrum(gamma).min();
  } catch (const InvalidState&) {
    report.min_sigma.reset();
  }
  return report;
}

ValidityReport validate(const Eigen::MatrixXd& gamma, double tol) {
  return validate(CovarianceMatrix(gamma), tol);
}

CovarianceMatrix reduce(const CovarianceMatrix& gamma, std::span<const std::size_t> keep) {
  const std::size_t n = gamma.modes();
  if (keep.empty()) throw InvalidPartition("reduction needs at least one mode");
  std::vector<bool> seen(n, false);
  for (std::size_t mode : keep) {
    if (mode >= n) {
      std::ostringstream msg;
      msg << "mode " << mode + 1 << " out of range 1.." << n;
      throw InvalidPartition(msg.str());
    }
    if (seen[mode]) throw InvalidPartition("duplicate mode in reduction");
    seen[mode] = true;
  }
  const auto k = static_cast<Eigen::Index>(keep.size());
  std::vector<Eigen::Index> rows(2 * keep.size());
  for (Eigen::Index i = 0; i < k; ++i) {
    rows[static_cast<std::size_t>(i)] = static_cast<Eigen::Index>(keep[static_cast<std::size_t>(i)]);
    rows[static_cast<std::size_t>(k + i)] = static_cast<Eigen::Index>(n + keep[static_cast<std::size_t>(i)]);
  }
  return CovarianceMatrix(gamma.matrix()(rows, rows));
}

double characteristic_function(const CovarianceMatrix& gamma, const PhasePoint& eta) {
  check_phase_point(gamma, eta);
  const Eigen::MatrixXd omega = symplectic_form(gamma.modes()).matrix();
  const Eigen::VectorXd rotated = omega.transpose() * eta;
  return std::exp(-0.25 * rotated.dot(gamma.matrix() * rotated));
}

WignerEvaluator::WignerEvaluator(const CovarianceMatrix& gamma) {
  detail::SpdEigen eig;
  try {
    eig = detail::spd_eigen<InvalidState>(gamma.matrix(), kSingularRatio, "singular covariance matrix");
  } catch (const InvalidState&) {
    throw NumericalFailure("Wigner function needs a strictly positive-definite covariance matrix", 0.0);
  }
  inverse_ = eig.power(-1.0);
  const double log_det = eig.values.array().log().sum();
  const double n = static_cast<double>(gamma.modes());
  prefactor_ = std::exp(-n * std::log(2.0 * std::numbers::pi) - 0.5 * log_det);
}

double WignerEvaluator::operator()(const PhasePoint& x) const {
  if (x.size() != inverse_.rows()) throw InvalidDimension("phase-space point has the wrong length");
  return prefactor_ * std::exp(-0.5 * x.dot(inverse_ * x));
}

double wigner_function(const CovarianceMatrix& gamma, const PhasePoint& x) {
  check_phase_point(gamma, x);
  return WignerEvaluator(gamma)(x);
}

}  // namespace sympent
