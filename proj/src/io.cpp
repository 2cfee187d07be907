#include "sympent/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include "sympent/errors.hpp"

namespace sympent::io {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw MalformedInput("cannot parse number '" + std::string(token) + "'");
  return value;
}

template <class T>
T get_field(const json& doc, const char* key, const char* what) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string(what) + ": field '" + key + "' missing or of the wrong type");
  }
}

template <class T>
T get_optional(const json& doc, const char* key, T fallback, const char* what) {
  return doc.contains(key) ? get_field<T>(doc, key, what) : fallback;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), result.ptr);
}

json covariance_to_json(const CovarianceMatrix& gamma) {
  const auto& m = gamma.matrix();
  json values = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) values.push_back(m(i, j));
  return json{{"n", gamma.modes()}, {"ordering", "qqpp"}, {"hbar", 1}, {"matrix", std::move(values)}};
}

CovarianceMatrix covariance_from_json(const json& doc) {
  constexpr const char* what = "covariance JSON";
  if (!doc.is_object()) throw MalformedInput("covariance JSON must be an object");
  const auto ordering = get_field<std::string>(doc, "ordering", what);
  if (ordering != "qqpp")
    throw MalformedInput("unsupported quadrature ordering '" + ordering + "'; only 'qqpp' is accepted");
  if (doc.contains("hbar") && get_field<double>(doc, "hbar", what) != 1.0)
    throw MalformedInput("only hbar = 1 covariance files are accepted");
  const auto n = get_field<long long>(doc, "n", what);
  if (n < 1) throw MalformedInput("covariance JSON: n must be positive");
  const auto values = get_field<std::vector<double>>(doc, "matrix", what);
  const auto dim = static_cast<Eigen::Index>(2 * n);
  if (static_cast<Eigen::Index>(values.size()) != dim * dim) {
    std::ostringstream msg;
    msg << "covariance JSON: expected " << dim * dim << " matrix entries for n = " << n << ", got " << values.size();
    throw MalformedInput(msg.str());
  }
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = values[static_cast<std::size_t>(i * dim + j)];
  return CovarianceMatrix(std::move(m));
}

std::string covariance_to_csv(const CovarianceMatrix& gamma) {
  std::ostringstream out;
  out << "# sympent covariance n=" << gamma.modes() << " ordering=qqpp\n";
  const auto& m = gamma.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << format_double(m(i, j));
    out << '\n';
  }
  return out.str();
}

CovarianceMatrix covariance_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw MalformedInput("empty covariance CSV");
  std::istringstream header(line);
  std::string hash, tool, kind, n_token, ordering_token;
  header >> hash >> tool >> kind >> n_token >> ordering_token;
  if (hash != "#" || tool != "sympent" || kind != "covariance" || n_token.rfind("n=", 0) != 0 ||
      ordering_token.rfind("ordering=", 0) != 0)
    throw MalformedInput("covariance CSV must start with '# sympent covariance n=<n> ordering=qqpp'");
  const std::string ordering = ordering_token.substr(9);
  if (ordering != "qqpp")
    throw MalformedInput("unsupported quadrature ordering '" + ordering + "'; only 'qqpp' is accepted");
  const double n_value = parse_number(std::string_view(n_token).substr(2));
  if (n_value < 1 || n_value != std::floor(n_value)) throw MalformedInput("covariance CSV: bad mode count");
  const auto dim = static_cast<Eigen::Index>(2 * n_value);

  Eigen::MatrixXd m(dim, dim);
  Eigen::Index row = 0;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    if (row >= dim) throw MalformedInput("covariance CSV has too many rows");
    Eigen::Index col = 0;
    std::string_view rest = view;
    while (true) {
      const auto comma = rest.find(',');
      if (col >= dim) throw MalformedInput("covariance CSV row has too many entries");
      m(row, col++) = parse_number(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (col != dim) throw MalformedInput("covariance CSV row has too few entries");
    ++row;
  }
  if (row != dim) throw MalformedInput("covariance CSV has too few rows");
  return CovarianceMatrix(std::move(m));
}

QuadraticModel ModelSpec::build() const {
  if (kind == Kind::two_oscillator) return two_oscillator_model(m, omega, lambda);
  return chain_model(n, m, omega, lambda, boundary);
}

json model_to_json(const ModelSpec& spec) {
  return json{{"type", spec.kind == ModelSpec::Kind::two_oscillator ? "two_oscillator" : "chain"},
              {"n", spec.n},
              {"m", spec.m},
              {"omega", spec.omega},
              {"lambda", spec.lambda},
              {"boundary", std::string(to_string(spec.boundary))}};
}

ModelSpec model_from_json(const json& doc) {
  constexpr const char* what = "model JSON";
  if (!doc.is_object()) throw MalformedInput("model JSON must be an object");
  ModelSpec spec;
  const auto type = get_field<std::string>(doc, "type", what);
  if (type == "two_oscillator") {
    spec.kind = ModelSpec::Kind::two_oscillator;
    spec.n = 2;
    if (doc.contains("n") && get_field<long long>(doc, "n", what) != 2)
      throw MalformedInput("model JSON: two_oscillator has n = 2");
  } else if (type == "chain") {
    spec.kind = ModelSpec::Kind::chain;
    const auto n = get_field<long long>(doc, "n", what);
    if (n < 1) throw MalformedInput("model JSON: n must be positive");
    spec.n = static_cast<std::size_t>(n);
  } else {
    throw MalformedInput("model JSON: unknown type '" + type + "'");
  }
  spec.m = get_optional<double>(doc, "m", spec.m, what);
  spec.omega = get_optional<double>(doc, "omega", spec.omega, what);
  spec.lambda = get_optional<double>(doc, "lambda", spec.lambda, what);
  try {
    spec.boundary = parse_boundary(get_optional<std::string>(doc, "boundary", "open", what));
  } catch (const ParameterError& e) {
    throw MalformedInput(std::string("model JSON: ") + e.what());
  }
  return spec;
}

StateInput parse_state_input(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw MalformedInput("empty input");
  if (body.front() == '#') return covariance_from_csv(body);
  if (body.front() != '{') throw MalformedInput("input is neither JSON nor a sympent covariance CSV");
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (doc.contains("type")) return model_from_json(doc);
  if (doc.contains("matrix")) return covariance_from_json(doc);
  throw MalformedInput("JSON input has neither 'type' (model) nor 'matrix' (covariance)");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("failed writing '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

json spectrum_to_json(const SymplecticSpectrum& spectrum) { return json(spectrum.values); }

json report_to_json(const EntropyReport& report) {
  auto one_based = [](const std::vector<std::size_t>& side) {
    json out = json::array();
    for (std::size_t mode : side) out.push_back(mode + 1);
    return out;
  };
  json modes = json::array();
  for (const auto& mode : report.modes) {
    json beta = std::isinf(mode.beta) ? json("inf") : json(mode.beta);
    modes.push_back({{"sigma", mode.sigma}, {"n_bar", mode.n_bar}, {"beta", beta}, {"entropy_bits", mode.entropy_bits}});
  }
  json doc{{"partition",
            {{"text", report.partition.to_string()},
             {"set_a", one_based(report.partition.set_a())},
             {"set_b", one_based(report.partition.set_b())}}},
           {"spectrum_a", spectrum_to_json(report.spectrum_a)},
           {"modes", std::move(modes)},
           {"total_bits", report.total_bits},
           {"s_count", report.s_count},
           {"log_base", std::string(to_string(report.base))},
           {"total", report.total},
           {"thermal_threshold", report.thermal_threshold}};
  if (report.spectrum_b) doc["spectrum_b"] = spectrum_to_json(*report.spectrum_b);
  if (report.total_b_bits) {
    doc["total_b_bits"] = *report.total_b_bits;
    doc["ab_residual_bits"] = std::abs(report.total_bits - *report.total_b_bits);
  }
  if (report.s_count_b) doc["s_count_b"] = *report.s_count_b;
  return doc;
}

}  // namespace sympent::io
