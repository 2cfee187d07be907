#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sympent/covariance.hpp"
#include "sympent/gaussian_state.hpp"
#include "sympent/log_base.hpp"
#include "sympent/symplectic.hpp"

namespace sympent {

/// Spectra in [1/2 - kClampWindow, 1/2 + kClampWindow] are treated as pure
/// modes: sigma is snapped to 1/2 and contributes exactly zero entropy.
inline constexpr double kClampWindow = 1e-9;

/// Default cut above which a mode counts as thermal (entangled).
inline constexpr double kThermalThreshold = 1e-7;

/// (sigma + 1/2) log(sigma + 1/2) - (sigma - 1/2) log(sigma - 1/2).
double mode_entropy(double sigma, LogBase base = LogBase::bits);

/// n_bar = sigma - 1/2.
double mean_occupation(double sigma);

/// beta = ln((sigma + 1/2) / (sigma - 1/2)); +infinity for a pure mode.
double thermal_parameter(double sigma);

/// One decoupled oscillator of the Williamson decomposition.
struct ThermalMode {
  double sigma = 0.5;
  double n_bar = 0.0;
  double beta = 0.0;  ///< +inf for sigma == 1/2
  double entropy_bits = 0.0;

  static ThermalMode from_sigma(double sigma);
  bool ground() const noexcept;
};

struct EntropyOptions {
  LogBase base = LogBase::bits;
  double thermal_threshold = kThermalThreshold;
  /// Also reduce to B and report its spectrum and total.
  bool with_complement = false;
};

struct EntropyReport {
  ModePartition partition;
  SymplecticSpectrum spectrum_a;
  std::vector<ThermalMode> modes;
  double total_bits = 0.0;
  std::size_t s_count = 0;

  LogBase base = LogBase::bits;
  /// total_bits expressed in `base`.
  double total = 0.0;
  double thermal_threshold = kThermalThreshold;

  std::optional<SymplecticSpectrum> spectrum_b;
  std::optional<double> total_b_bits;
  std::optional<std::size_t> s_count_b;

  /// Sigmas above the thermal threshold, descending.
  std::vector<double> thermal_sigmas() const;
};

EntropyReport entanglement_entropy(const CovarianceMatrix& gamma, const ModePartition& partition,
                                   const EntropyOptions& options = {});

/// Sum of mode entropies of the full spectrum (von Neumann entropy of the state).
double total_entropy(const SymplecticSpectrum& spectrum, LogBase base = LogBase::bits);

/// True iff every symplectic eigenvalue lies within tol of 1/2.
bool purity_check(const CovarianceMatrix& gamma, double tol = kDefaultTol);

}  // namespace sympent
