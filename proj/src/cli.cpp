#include "sympent/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "sympent/entropy.hpp"
#include "sympent/errors.hpp"
#include "sympent/fock_oracle.hpp"
#include "sympent/models.hpp"
#include "sympent/symplectic.hpp"

#ifndef SYMPENT_VERSION
#define SYMPENT_VERSION "0.0.0"
#endif

namespace sympent::cli {
namespace {

using nlohmann::json;

constexpr const char* kConventions = "ordering=qqpp hbar=1 vacuum_covariance=0.5*I";

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// Shared plumbing for one command invocation.
struct Invocation {
  const GlobalOptions& options;
  std::ostream& out;
  std::ostream& err;
  std::string command;
  json echoed;
  std::string input_bytes;

  // Primary output goes to --out (atomically) or stdout. The RunRecord,
  // which carries the only timestamp, goes to a side file.
  void emit(const std::string& primary) const {
    if (options.out) {
      io::write_file_atomic(*options.out, primary);
    } else {
      out << primary;
      out.flush();
    }
    std::optional<std::filesystem::path> record = options.record;
    if (!record && options.out) {
      record = *options.out;
      *record += ".run.json";
    }
    if (!record) return;
    json doc{{"tool", "sympent"},
             {"version", SYMPENT_VERSION},
             {"command", command},
             {"input_digest", sha256_hex(input_bytes)},
             {"options", echoed},
             {"outputs", {{"path", options.out ? options.out->string() : std::string("-")},
                          {"digest", sha256_hex(primary)}}},
             {"timestamp", utc_timestamp()}};
    io::write_file_atomic(*record, doc.dump(2) + "\n");
  }
};

json global_echo(const GlobalOptions& o) {
  return json{{"tol", o.tol},
              {"base", std::string(to_string(o.base))},
              {"out", o.out ? o.out->string() : std::string()},
              {"seed", o.seed}};
}

json overrides_echo(const ModelOverrides& o) {
  json doc = json::object();
  if (o.type) doc["type"] = *o.type;
  if (o.n) doc["n"] = *o.n;
  if (o.m) doc["m"] = *o.m;
  if (o.omega) doc["omega"] = *o.omega;
  if (o.lambda) doc["lambda"] = *o.lambda;
  if (o.boundary) doc["boundary"] = *o.boundary;
  return doc;
}

// Reads the positional input or, with no file, builds a model from flags.
io::StateInput load_state(const std::string& path, const ModelOverrides& overrides, std::string& bytes) {
  if (!path.empty()) {
    bytes = io::read_file(path);
    return io::parse_state_input(bytes);
  }
  if (!overrides.type) throw MalformedInput("no input file given and no --model selected");
  bytes = overrides_echo(overrides).dump();
  return io::ModelSpec{};
}

json validity_json(const ValidityReport& r, std::size_t n, double tol) {
  json doc{{"valid", r.valid},
           {"n", n},
           {"tol", tol},
           {"min_uncertainty_eigenvalue", r.min_uncertainty_eigenvalue},
           {"conventions", kConventions}};
  doc["min_sigma"] = r.min_sigma ? json(*r.min_sigma) : json(nullptr);
  return doc;
}

int report_error(std::ostream& err, const std::exception& e) {
  err << "sympent: error: " << e.what() << "\n";
  if (dynamic_cast<const InvalidState*>(&e) || dynamic_cast<const UnphysicalEigenvalue*>(&e)) return kUnphysical;
  return kMalformed;
}

std::vector<std::size_t> parse_mode_list(const std::string& text, std::size_t n) {
  std::vector<std::size_t> modes;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      const long long value = std::stoll(token);
      if (value < 1 || static_cast<std::size_t>(value) > n) throw InvalidPartition("mode index out of range: " + token);
      modes.push_back(static_cast<std::size_t>(value - 1));
    } catch (const std::logic_error&) {
      throw InvalidPartition("bad mode index '" + token + "'");
    }
  }
  if (modes.empty()) throw InvalidPartition("empty mode list");
  return modes;
}

int cmd_validate(Invocation& inv, const std::string& path, const ModelOverrides& overrides) {
  const auto state = load_state(path, overrides, inv.input_bytes);
  const auto gamma = resolve_state(state, overrides);
  const auto report = validate(gamma, inv.options.tol);
  inv.emit(validity_json(report, gamma.modes(), inv.options.tol).dump(2) + "\n");
  return report.valid ? kOk : kUnphysical;
}

int cmd_spectrum(Invocation& inv, const std::string& path, const ModelOverrides& overrides, const std::string& keep) {
  const auto state = load_state(path, overrides, inv.input_bytes);
  auto gamma = resolve_state(state, overrides);
  json doc{{"n", gamma.modes()}, {"conventions", kConventions}};
  if (!keep.empty()) {
    const auto modes = parse_mode_list(keep, gamma.modes());
    gamma = reduce(gamma, modes);
    json kept = json::array();
    for (auto m : modes) kept.push_back(m + 1);
    doc["modes"] = kept;
  }
  const auto check = validate(gamma, inv.options.tol);
  if (!check.valid) {
    inv.err << "sympent: state is unphysical (min eigenvalue of G + i Omega/2 = " << check.min_uncertainty_eigenvalue
            << ")\n";
    return kUnphysical;
  }
  const auto spectrum = symplectic_spectrum(gamma);
  doc["spectrum"] = io::spectrum_to_json(spectrum);
  doc["pure"] = purity_check(gamma, inv.options.tol);
  doc["entropy"] = total_entropy(spectrum, inv.options.base);
  doc["log_base"] = std::string(to_string(inv.options.base));
  inv.emit(doc.dump(2) + "\n");
  return kOk;
}

int cmd_entropy(Invocation& inv, const std::string& path, const ModelOverrides& overrides,
                const std::string& partition_text, double threshold) {
  const auto state = load_state(path, overrides, inv.input_bytes);
  const auto gamma = resolve_state(state, overrides);
  const auto partition = ModePartition::parse(partition_text, gamma.modes());
  const auto check = validate(gamma, inv.options.tol);
  if (!check.valid) {
    inv.err << "sympent: state is unphysical (min eigenvalue of G + i Omega/2 = " << check.min_uncertainty_eigenvalue
            << ")\n";
    return kUnphysical;
  }
  const bool pure = purity_check(gamma, inv.options.tol);
  EntropyOptions options;
  options.base = inv.options.base;
  options.thermal_threshold = threshold;
  options.with_complement = pure;
  const auto report = entanglement_entropy(gamma, partition, options);
  json doc = io::report_to_json(report);
  doc["global_pure"] = pure;
  doc["conventions"] = kConventions;
  if (!pure)
    doc["note"] = "global state is mixed: the reduced entropy is not an entanglement measure";
  inv.emit(doc.dump(2) + "\n");
  return kOk;
}

int cmd_sweep(Invocation& inv, const std::string& path, SweepSpec overrides_spec, const json& flag_overrides) {
  inv.input_bytes = io::read_file(path);
  json doc;
  try {
    doc = json::parse(inv.input_bytes);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid sweep JSON: ") + e.what());
  }
  SweepSpec spec = sweep_from_json(doc);
  if (flag_overrides.contains("parameter")) spec.parameter = overrides_spec.parameter;
  if (flag_overrides.contains("start")) spec.start = overrides_spec.start;
  if (flag_overrides.contains("stop")) spec.stop = overrides_spec.stop;
  if (flag_overrides.contains("count")) spec.count = overrides_spec.count;
  if (flag_overrides.contains("partition")) spec.partition = overrides_spec.partition;
  spec.check();
  inv.echoed["sweep"] = {{"model", io::model_to_json(spec.model)},
                         {"parameter", spec.parameter},
                         {"start", spec.start},
                         {"stop", spec.stop},
                         {"count", spec.count},
                         {"partition", spec.partition}};
  const auto rows = run_sweep(spec, inv.options.base, inv.options.threads);
  inv.emit(sweep_csv(spec, rows, inv.options.base));
  return kOk;
}

int cmd_verify(Invocation& inv, const std::string& grid_name) {
  inv.input_bytes = grid_name;
  const auto rows = run_verify(verify_grid(grid_name), inv.options.base);
  std::ostringstream out;
  const auto base = std::string(to_string(inv.options.base));
  out << "# sympent verify grid=" << grid_name << " log_base=" << base << " tol=" << io::format_double(inv.options.tol)
      << " tail_bound=" << io::format_double(fock::kMaxTailMass) << "\n";
  out << "sigma,beta,n_max,closed_form_" << base << ",fock_" << base << ",two_mode_" << base
      << ",max_deviation,status\n";
  double worst = 0.0;
  std::vector<double> offenders;
  for (const auto& row : rows) {
    const bool ok = row.deviation <= inv.options.tol;
    if (!ok) offenders.push_back(row.sigma);
    worst = std::max(worst, row.deviation);
    out << io::format_double(row.sigma) << ',' << io::format_double(row.beta) << ',' << row.n_max << ','
        << io::format_double(row.closed_form) << ',' << io::format_double(row.fock) << ','
        << (row.two_mode ? io::format_double(*row.two_mode) : std::string("n/a")) << ','
        << io::format_double(row.deviation) << ',' << (ok ? "ok" : "FAIL") << "\n";
  }
  out << "# max_deviation=" << io::format_double(worst) << " points=" << rows.size()
      << " failures=" << offenders.size() << "\n";
  inv.emit(out.str());
  if (!offenders.empty()) {
    inv.err << "sympent: oracle mismatch above " << inv.options.tol << " at sigma =";
    for (double s : offenders) inv.err << ' ' << io::format_double(s);
    inv.err << "\n";
    return kOracleMismatch;
  }
  return kOk;
}

int cmd_wigner(Invocation& inv, const std::string& path, const ModelOverrides& overrides, std::size_t mode,
               const std::string& grid_text) {
  const auto state = load_state(path, overrides, inv.input_bytes);
  const auto gamma = resolve_state(state, overrides);
  WignerGrid grid = parse_wigner_grid(grid_text);
  grid.mode = mode;
  if (mode < 1 || mode > gamma.modes()) {
    std::ostringstream msg;
    msg << "--mode " << mode << " out of range 1.." << gamma.modes();
    throw InvalidPartition(msg.str());
  }
  const std::vector<std::size_t> keep{mode - 1};
  const auto reduced = reduce(gamma, keep);
  const auto samples = sample_wigner(reduced, grid);

  std::ostringstream out;
  out << "# sympent wigner mode=" << mode << " extent=" << io::format_double(grid.extent) << " steps=" << grid.steps
      << " integral=" << io::format_double(samples.integral) << " peak=" << io::format_double(samples.peak) << "\n";
  out << "# " << kConventions << " normalization=(2pi)^-n det(G)^-1/2\n";
  out << "q,p,W\n";
  const std::size_t s = grid.steps;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      out << io::format_double(samples.axis[i]) << ',' << io::format_double(samples.axis[j]) << ','
          << io::format_double(samples.values[i * s + j]) << "\n";
  inv.emit(out.str());
  return kOk;
}

}  // namespace

io::ModelSpec ModelOverrides::apply(io::ModelSpec spec) const {
  if (type) {
    if (*type == "two_oscillator") {
      spec.kind = io::ModelSpec::Kind::two_oscillator;
      spec.n = 2;
    } else if (*type == "chain") {
      spec.kind = io::ModelSpec::Kind::chain;
    } else {
      throw ParameterError("--model must be 'two_oscillator' or 'chain', got '" + *type + "'");
    }
  }
  if (n) spec.n = *n;
  if (m) spec.m = *m;
  if (omega) spec.omega = *omega;
  if (lambda) spec.lambda = *lambda;
  if (boundary) spec.boundary = parse_boundary(*boundary);
  if (spec.kind == io::ModelSpec::Kind::two_oscillator && spec.n != 2)
    throw ParameterError("the two_oscillator model has exactly 2 modes");
  return spec;
}

CovarianceMatrix resolve_state(const io::StateInput& input, const ModelOverrides& overrides) {
  if (const auto* gamma = std::get_if<CovarianceMatrix>(&input)) {
    if (overrides.any()) throw ParameterError("model flags do not apply to a covariance-matrix input");
    return *gamma;
  }
  return ground_state_covariance(overrides.apply(std::get<io::ModelSpec>(input)).build());
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    values[i] = i + 1 == count ? stop : start + t * (stop - start);
  }
  return values;
}

void SweepSpec::check() const {
  if (parameter != "lambda" && parameter != "omega" && parameter != "m")
    throw ParameterError("sweep parameter must be lambda, omega or m, got '" + parameter + "'");
  if (count < 2) throw ParameterError("sweep count must be at least 2");
  if (!(start < stop)) throw ParameterError("sweep start must be below stop");
  if (partition.empty()) throw ParameterError("sweep needs a partition");
}

SweepSpec sweep_from_json(const json& doc) {
  if (!doc.is_object()) throw MalformedInput("sweep JSON must be an object");
  SweepSpec spec;
  try {
    spec.model = io::model_from_json(doc.at("model"));
    spec.parameter = doc.value("parameter", std::string("lambda"));
    spec.start = doc.at("start").get<double>();
    spec.stop = doc.at("stop").get<double>();
    const auto count = doc.at("count").get<long long>();
    if (count < 0) throw MalformedInput("sweep count must be nonnegative");
    spec.count = static_cast<std::size_t>(count);
    spec.partition = doc.at("partition").get<std::string>();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("sweep JSON: ") + e.what());
  }
  return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, LogBase base, unsigned threads) {
  spec.check();
  const auto grid = spec.grid();
  std::vector<SweepRow> rows(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());

  auto evaluate = [&](std::size_t i) {
    try {
      io::ModelSpec model = spec.model;
      if (spec.parameter == "lambda") model.lambda = grid[i];
      if (spec.parameter == "omega") model.omega = grid[i];
      if (spec.parameter == "m") model.m = grid[i];
      const auto gamma = ground_state_covariance(model.build());
      const auto partition = ModePartition::parse(spec.partition, gamma.modes());
      EntropyOptions options;
      options.base = base;
      const auto report = entanglement_entropy(gamma, partition, options);
      rows[i] = SweepRow{grid[i], report.spectrum_a.values, report.total_bits, report.total, report.s_count};
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) evaluate(i);
      });
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "sweep aborted at " << spec.parameter << " = " << io::format_double(grid[i]) << ": " << e.what();
      throw ParameterError(msg.str());
    }
  }
  return rows;
}

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows, LogBase base) {
  std::ostringstream out;
  const auto& model = spec.model;
  out << "# sympent sweep model=" << (model.kind == io::ModelSpec::Kind::chain ? "chain" : "two_oscillator")
      << " n=" << model.n << " m=" << io::format_double(model.m) << " omega=" << io::format_double(model.omega)
      << " lambda=" << io::format_double(model.lambda) << " boundary=" << to_string(model.boundary)
      << " parameter=" << spec.parameter << " start=" << io::format_double(spec.start)
      << " stop=" << io::format_double(spec.stop) << " count=" << spec.count << " partition=" << spec.partition << "\n";
  out << "# " << kConventions << " log_base=" << to_string(base)
      << " sigma=symplectic eigenvalues of the A-side reduction (descending, dimensionless)\n";
  const std::size_t width = rows.empty() ? 0 : rows.front().sigmas.size();
  out << "param";
  for (std::size_t k = 1; k <= width; ++k) out << ",sigma_" << k;
  out << ",total_" << to_string(base) << ",s_count\n";
  for (const auto& row : rows) {
    out << io::format_double(row.param);
    for (double s : row.sigmas) out << ',' << io::format_double(s);
    out << ',' << io::format_double(row.total) << ',' << row.s_count << "\n";
  }
  return out.str();
}

std::vector<double> verify_grid(const std::string& name) {
  std::vector<double> sigmas;
  for (int k = 1; k <= 6; ++k) sigmas.push_back(0.5 + std::pow(10.0, -k));
  for (double s : {0.6, 1.0 / std::sqrt(3.0), 1.5, 3.0, 10.0}) sigmas.push_back(s);
  if (name == "fine") {
    constexpr int kPoints = 60;
    for (int i = 0; i < kPoints; ++i) sigmas.push_back(0.5 + std::pow(10.0, -6.0 + 9.0 * i / (kPoints - 1)));
  } else if (name != "coarse") {
    throw ParameterError("--grid must be 'coarse' or 'fine', got '" + name + "'");
  }
  std::sort(sigmas.begin(), sigmas.end());
  sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());
  return sigmas;
}

std::vector<VerifyRow> run_verify(const std::vector<double>& sigmas, LogBase base) {
  // Dense partial traces get expensive; the two-mode column is skipped above this.
  constexpr std::size_t kDenseLimit = 600;
  std::vector<VerifyRow> rows;
  rows.reserve(sigmas.size());
  for (double sigma : sigmas) {
    VerifyRow row;
    row.sigma = sigma;
    row.beta = fock::beta_for_occupation(sigma - 0.5);
    row.n_max = fock::required_n_max(row.beta);
    row.closed_form = mode_entropy(sigma, base);
    row.fock = fock::thermal_entropy_bruteforce(row.beta, row.n_max, base);
    row.deviation = std::abs(row.closed_form - row.fock);
    if (row.n_max <= kDenseLimit) {
      row.two_mode = fock::two_mode_squeezed_entropy(row.beta, row.n_max, base);
      row.deviation = std::max(row.deviation, std::abs(row.closed_form - *row.two_mode));
    }
    rows.push_back(row);
  }
  return rows;
}

WignerGrid parse_wigner_grid(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParameterError("--grid must be 'extent,steps', got '" + text + "'");
  WignerGrid grid;
  try {
    std::size_t used = 0;
    const std::string extent = text.substr(0, comma);
    const std::string steps = text.substr(comma + 1);
    grid.extent = std::stod(extent, &used);
    if (used != extent.size()) throw std::invalid_argument(extent);
    const long long count = std::stoll(steps, &used);
    if (used != steps.size() || count < 2) throw std::invalid_argument(steps);
    grid.steps = static_cast<std::size_t>(count);
  } catch (const std::logic_error&) {
    throw ParameterError("--grid must be 'extent,steps' with extent > 0 and steps >= 2, got '" + text + "'");
  }
  if (!(grid.extent > 0.0)) throw ParameterError("--grid extent must be positive");
  return grid;
}

WignerSamples sample_wigner(const CovarianceMatrix& gamma, const WignerGrid& grid) {
  if (gamma.modes() != 1) throw InvalidDimension("Wigner grids are sampled for single-mode states");
  const WignerEvaluator wigner(gamma);
  WignerSamples samples;
  const std::size_t s = grid.steps;
  const double h = 2.0 * grid.extent / static_cast<double>(s - 1);
  samples.axis.resize(s);
  for (std::size_t i = 0; i < s; ++i) samples.axis[i] = -grid.extent + h * static_cast<double>(i);
  samples.values.resize(s * s);
  double sum = 0.0;
  Eigen::Vector2d x;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      x << samples.axis[i], samples.axis[j];
      const double w = wigner(x);
      samples.values[i * s + j] = w;
      sum += w;
    }
  samples.integral = sum * h * h;
  samples.peak = wigner.peak();
  return samples;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sympent: entanglement entropy of Gaussian states from covariance matrices"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions options;
  std::string base_text = "bits";
  std::string out_path, record_path;
  app.add_option("--tol", options.tol, "Absolute tolerance for residual and physicality checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--base", base_text, "Entropy log base")->check(CLI::IsMember({"bits", "nats"}));
  app.add_option("--out", out_path, "Write the primary output here (atomically) instead of stdout");
  app.add_option("--record", record_path, "Write the RunRecord JSON here (default <out>.run.json)");
  app.add_option("--seed", options.seed, "Seed for randomized modes");
  app.add_option("--threads", options.threads, "Worker threads for sweeps (0 = all cores)");

  std::string input;
  ModelOverrides overrides;
  auto add_model_flags = [&](CLI::App* sub) {
    sub->add_option("input", input, "Covariance (JSON/CSV) or model JSON file");
    sub->add_option("--model", overrides.type, "Build a model instead of reading a file: two_oscillator | chain");
    sub->add_option("--modes", overrides.n, "Chain length");
    sub->add_option("--mass", overrides.m, "Oscillator mass m");
    sub->add_option("--omega", overrides.omega, "On-site frequency omega");
    sub->add_option("--lambda", overrides.lambda, "Coupling lambda");
    sub->add_option("--boundary", overrides.boundary, "Chain boundary: open | periodic");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the uncertainty relation G + i Omega/2 >= 0");
  add_model_flags(validate_cmd);

  std::string keep;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Symplectic spectrum of a state or a reduction");
  add_model_flags(spectrum_cmd);
  spectrum_cmd->add_option("--keep", keep, "Reduce to these 1-based modes first, e.g. 1,3");

  std::string partition;
  double threshold = kThermalThreshold;
  auto* entropy_cmd = app.add_subcommand("entropy", "Bipartite entanglement entropy report");
  add_model_flags(entropy_cmd);
  entropy_cmd->add_option("--partition", partition, "Partition 'i,j,..|k,l,..' (1-based)")->required();
  entropy_cmd->add_option("--thermal-threshold", threshold, "sigma - 1/2 above which a mode counts as thermal");

  std::string sweep_file;
  SweepSpec sweep_flags;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep a model parameter and tabulate the A-side spectrum");
  sweep_cmd->add_option("spec", sweep_file, "Sweep spec JSON")->required();
  auto* o_param = sweep_cmd->add_option("--parameter", sweep_flags.parameter, "lambda | omega | m");
  auto* o_start = sweep_cmd->add_option("--start", sweep_flags.start, "Grid start");
  auto* o_stop = sweep_cmd->add_option("--stop", sweep_flags.stop, "Grid stop");
  auto* o_count = sweep_cmd->add_option("--count", sweep_flags.count, "Grid points");
  auto* o_part = sweep_cmd->add_option("--partition", sweep_flags.partition, "Partition override");

  std::string grid_name = "coarse";
  auto* verify_cmd = app.add_subcommand("verify", "Compare closed-form entropies with the Fock-space oracle");
  verify_cmd->add_option("--grid", grid_name, "coarse | fine")->check(CLI::IsMember({"coarse", "fine"}));

  std::size_t wigner_mode = 1;
  std::string wigner_grid = "8,161";
  auto* wigner_cmd = app.add_subcommand("wigner", "Sample the single-mode reduced Wigner function");
  add_model_flags(wigner_cmd);
  wigner_cmd->add_option("--mode", wigner_mode, "1-based mode index");
  wigner_cmd->add_option("--grid", wigner_grid, "extent,steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "sympent: usage error: " << e.what() << "\n";
    return kMalformed;
  }

  try {
    options.base = parse_log_base(base_text);
    if (!out_path.empty()) options.out = out_path;
    if (!record_path.empty()) options.record = record_path;

    Invocation inv{options, out, err, "", global_echo(options), ""};
    inv.echoed["model_overrides"] = overrides_echo(overrides);
    inv.echoed["input"] = input;
    if (validate_cmd->parsed()) {
      inv.command = "validate";
      return cmd_validate(inv, input, overrides);
    }
    if (spectrum_cmd->parsed()) {
      inv.command = "spectrum";
      inv.echoed["keep"] = keep;
      return cmd_spectrum(inv, input, overrides, keep);
    }
    if (entropy_cmd->parsed()) {
      inv.command = "entropy";
      inv.echoed["partition"] = partition;
      inv.echoed["thermal_threshold"] = threshold;
      return cmd_entropy(inv, input, overrides, partition, threshold);
    }
    if (sweep_cmd->parsed()) {
      inv.command = "sweep";
      inv.echoed["input"] = sweep_file;
      json flags = json::object();
      if (o_param->count()) flags["parameter"] = true;
      if (o_start->count()) flags["start"] = true;
      if (o_stop->count()) flags["stop"] = true;
      if (o_count->count()) flags["count"] = true;
      if (o_part->count()) flags["partition"] = true;
      return cmd_sweep(inv, sweep_file, sweep_flags, flags);
    }
    if (verify_cmd->parsed()) {
      inv.command = "verify";
      inv.echoed["grid"] = grid_name;
      return cmd_verify(inv, grid_name);
    }
    if (wigner_cmd->parsed()) {
      inv.command = "wigner";
      inv.echoed["mode"] = wigner_mode;
      inv.echoed["grid"] = wigner_grid;
      return cmd_wigner(inv, input, overrides, wigner_mode, wigner_grid);
    }
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
  return kMalformed;
}

}  // namespace sympent::cli
