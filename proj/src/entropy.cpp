#include "sympent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sympent/errors.hpp"

namespace sympent {
namespace {

// Returns sigma snapped to 1/2 inside the clamp window; rejects anything
// further below.
double checked_sigma(double sigma) {
  if (!std::isfinite(sigma) || sigma < 0.5 - kClampWindow) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "symplectic eigenvalue " << sigma << " is below the vacuum bound 1/2";
    throw UnphysicalEigenvalue(msg.str(), sigma);
  }
  return std::abs(sigma - 0.5) <= kClampWindow ? 0.5 : sigma;
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double mode_entropy(double sigma, LogBase base) {
  const double s = checked_sigma(sigma);
  if (s == 0.5) return 0.0;
  return from_nats(xlogx(s + 0.5) - xlogx(s - 0.5), base);
}

double mean_occupation(double sigma) {
  if (!std::isfinite(sigma) || sigma < 0.5 - kClampWindow) checked_sigma(sigma);
  return std::max(0.0, sigma - 0.5);
}

double thermal_parameter(double sigma) {
  const double n_bar = mean_occupation(sigma);
  if (n_bar == 0.0) return std::numeric_limits<double>::infinity();
  return std::log1p(1.0 / n_bar);
}

ThermalMode ThermalMode::from_sigma(double sigma) {
  const double s = checked_sigma(sigma);
  ThermalMode mode;
  mode.sigma = s;
  mode.n_bar = s - 0.5;
  mode.beta = thermal_parameter(s);
  mode.entropy_bits = mode_entropy(s, LogBase::bits);
  return mode;
}

bool ThermalMode::ground() const noexcept { return n_bar == 0.0; }

std::vector<double> EntropyReport::thermal_sigmas() const {
  std::vector<double> out;
  for (const auto& mode : modes)
    if (mode.sigma > 0.5 + thermal_threshold) out.push_back(mode.sigma);
  return out;
}

double total_entropy(const SymplecticSpectrum& spectrum, LogBase base) {
  double nats = 0.0;
  for (double sigma : spectrum.values) nats += mode_entropy(sigma, LogBase::nats);
  return from_nats(nats, base);
}

EntropyReport entanglement_entropy(const CovarianceMatrix& gamma, const ModePartition& partition,
                                   const EntropyOptions& options) {
  if (partition.modes() != gamma.modes()) {
    std::ostringstream msg;
    msg << "partition covers " << partition.modes() << " modes but the state has " << gamma.modes();
    throw InvalidPartition(msg.str());
  }
  if (const auto check = validate(gamma); !check.valid) {
    std::ostringstream msg;
    msg << "state violates the uncertainty relation (min eigenvalue of G + i Omega/2 = "
        << check.min_uncertainty_eigenvalue << ")";
    throw InvalidState(msg.str());
  }

  auto side = [&](const std::vector<std::size_t>& keep, SymplecticSpectrum& spectrum, std::vector<ThermalMode>& modes,
                  double& bits, std::size_t& count) {
    spectrum = symplectic_spectrum(reduce(gamma, keep));
    modes.clear();
    bits = 0.0;
    count = 0;
    for (double sigma : spectrum.values) {
      modes.push_back(ThermalMode::from_sigma(sigma));
      bits += modes.back().entropy_bits;
      if (modes.back().sigma > 0.5 + options.thermal_threshold) ++count;
    }
  };

  EntropyReport report{partition, {}, {}, 0.0, 0, options.base, 0.0, options.thermal_threshold, {}, {}, {}};
  side(partition.set_a(), report.spectrum_a, report.modes, report.total_bits, report.s_count);
  report.total = options.base == LogBase::bits ? report.total_bits : total_entropy(report.spectrum_a, LogBase::nats);

  if (options.with_complement) {
    SymplecticSpectrum spectrum_b;
    std::vector<ThermalMode> modes_b;
    double bits_b = 0.0;
    std::size_t count_b = 0;
    side(partition.set_b(), spectrum_b, modes_b, bits_b, count_b);
    report.spectrum_b = std::move(spectrum_b);
    report.total_b_bits = bits_b;
    report.s_count_b = count_b;
  }
  return report;
}

bool purity_check(const CovarianceMatrix& gamma, double tol) {
  const auto spectrum = symplectic_spectrum(gamma);
  return std::all_of(spectrum.values.begin(), spectrum.values.end(),
                     [tol](double sigma) { return std::abs(sigma - 0.5) <= tol; });
}

}  // namespace sympent
