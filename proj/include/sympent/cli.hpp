#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sympent/gaussian_state.hpp"
#include "sympent/io.hpp"
#include "sympent/log_base.hpp"

namespace sympent::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMalformed = 1,  ///< I/O, parse, usage and parameter errors
  kUnphysical = 2,
  kOracleMismatch = 3,
};

struct GlobalOptions {
  double tol = 1e-8;
  LogBase base = LogBase::bits;
  std::optional<std::filesystem::path> out;
  /// Explicit RunRecord path; defaults to <out>.run.json when out is set.
  std::optional<std::filesystem::path> record;
  std::uint64_t seed = 0;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

/// Command-line overrides for model inputs; unset fields keep the file value.
struct ModelOverrides {
  std::optional<std::string> type;
  std::optional<std::size_t> n;
  std::optional<double> m;
  std::optional<double> omega;
  std::optional<double> lambda;
  std::optional<std::string> boundary;

  bool any() const { return type || n || m || omega || lambda || boundary; }
  io::ModelSpec apply(io::ModelSpec spec) const;
};

/// Linear grid over one model parameter.
struct SweepSpec {
  io::ModelSpec model;
  std::string parameter = "lambda";  ///< lambda | omega | m
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 2;
  std::string partition;

  std::vector<double> grid() const;
  /// Throws ParameterError if the invariants do not hold.
  void check() const;
};

SweepSpec sweep_from_json(const nlohmann::json& doc);

struct SweepRow {
  double param = 0.0;
  std::vector<double> sigmas;
  double total_bits = 0.0;
  double total = 0.0;  ///< in the requested base
  std::size_t s_count = 0;
};

/// Evaluates every grid point, in parallel when threads != 1; rows come back
/// ordered by grid index.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, LogBase base, unsigned threads);

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows, LogBase base);

struct VerifyRow {
  double sigma = 0.0;
  double beta = 0.0;
  std::size_t n_max = 0;
  double closed_form = 0.0;
  double fock = 0.0;
  std::optional<double> two_mode;
  double deviation = 0.0;
};

/// Sigma grid of the oracle comparison: "coarse" or "fine".
std::vector<double> verify_grid(const std::string& name);
std::vector<VerifyRow> run_verify(const std::vector<double>& sigmas, LogBase base);

struct WignerGrid {
  std::size_t mode = 1;  ///< 1-based
  double extent = 8.0;
  std::size_t steps = 161;
};

/// Parses "extent,steps".
WignerGrid parse_wigner_grid(const std::string& text);

struct WignerSamples {
  std::vector<double> axis;
  std::vector<double> values;  ///< row-major over (q, p)
  double integral = 0.0;
  double peak = 0.0;
};

WignerSamples sample_wigner(const CovarianceMatrix& gamma, const WignerGrid& grid);

/// Covariance for any state input (models are built and solved).
CovarianceMatrix resolve_state(const io::StateInput& input, const ModelOverrides& overrides);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Full front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sympent::cli
