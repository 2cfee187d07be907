#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "sympent/covariance.hpp"
#include "sympent/entropy.hpp"
#include "sympent/models.hpp"

namespace sympent::io {

/// Shortest text that round-trips the double exactly, at most 17 significant
/// digits, independent of the global locale.
std::string format_double(double value);

/// {"n", "ordering": "qqpp", "hbar": 1, "matrix": [row-major 4n^2 numbers]}
nlohmann::json covariance_to_json(const CovarianceMatrix& gamma);
CovarianceMatrix covariance_from_json(const nlohmann::json& doc);

/// "# sympent covariance n=<n> ordering=qqpp" followed by 2n rows of 2n values.
std::string covariance_to_csv(const CovarianceMatrix& gamma);
CovarianceMatrix covariance_from_csv(std::string_view text);

/// Model description as it appears in model files.
struct ModelSpec {
  enum class Kind { two_oscillator, chain };
  Kind kind = Kind::two_oscillator;
  std::size_t n = 2;
  double m = 1.0;
  double omega = 1.0;
  double lambda = 0.0;
  Boundary boundary = Boundary::open;

  QuadraticModel build() const;
};

nlohmann::json model_to_json(const ModelSpec& spec);
ModelSpec model_from_json(const nlohmann::json& doc);

/// A state input file is either a covariance matrix or a model description.
using StateInput = std::variant<CovarianceMatrix, ModelSpec>;

/// Dispatches on content: JSON with "type" is a model, JSON with "matrix" a
/// covariance, text starting with "# sympent covariance" a CSV covariance.
/// Throws MalformedInput.
StateInput parse_state_input(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary and renames over `path` on success.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

nlohmann::json spectrum_to_json(const SymplecticSpectrum& spectrum);
/// beta = inf is encoded as the string "inf".
nlohmann::json report_to_json(const EntropyReport& report);

}  // namespace sympent::io
