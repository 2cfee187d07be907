#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sympent/entropy.hpp"
#include "sympent/errors.hpp"
#include "sympent/fock_oracle.hpp"
#include "sympent/gaussian_state.hpp"
#include "sympent/io.hpp"
#include "sympent/models.hpp"
#include "sympent/symplectic.hpp"

namespace py = pybind11;
using namespace sympent;

namespace {

CovarianceMatrix as_gamma(const Eigen::MatrixXd& m) { return CovarianceMatrix(m); }

py::dict report_dict(const EntropyReport& r) {
  py::dict d;
  d["partition"] = r.partition.to_string();
  d["spectrum_a"] = r.spectrum_a.values;
  d["total_bits"] = r.total_bits;
  d["total"] = r.total;
  d["log_base"] = std::string(to_string(r.base));
  d["s_count"] = r.s_count;
  py::list modes;
  for (const auto& m : r.modes) {
    py::dict mode;
    mode["sigma"] = m.sigma;
    mode["n_bar"] = m.n_bar;
    mode["beta"] = m.beta;
    mode["entropy_bits"] = m.entropy_bits;
    modes.append(mode);
  }
  d["modes"] = modes;
  if (r.spectrum_b) d["spectrum_b"] = r.spectrum_b->values;
  if (r.total_b_bits) d["total_b_bits"] = *r.total_b_bits;
  return d;
}

}  // namespace

PYBIND11_MODULE(_sympent, m) {
  m.doc() = "Entanglement entropy of Gaussian states from covariance matrices (qqpp ordering, hbar = 1).";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidDimension>(m, "InvalidDimension", error);
  py::register_exception<MalformedInput>(m, "MalformedInput", error);
  py::register_exception<InvalidState>(m, "InvalidState", error);
  py::register_exception<InvalidPartition>(m, "InvalidPartition", error);
  py::register_exception<UnphysicalEigenvalue>(m, "UnphysicalEigenvalue", error);
  py::register_exception<ParameterError>(m, "ParameterError", error);
  py::register_exception<NoGroundState>(m, "NoGroundState", error);
  py::register_exception<NumericalFailure>(m, "NumericalFailure", error);
  py::register_exception<TruncationError>(m, "TruncationError", error);

  m.def("vacuum", [](std::size_t n) { return CovarianceMatrix::vacuum(n).matrix(); }, py::arg("n"));
  m.def("symplectic_form", [](std::size_t n) { return symplectic_form(n).matrix(); }, py::arg("n"));

  m.def(
      "validate",
      [](const Eigen::MatrixXd& gamma, double tol) {
        const auto r = validate(gamma, tol);
        py::dict d;
        d["valid"] = r.valid;
        d["min_uncertainty_eigenvalue"] = r.min_uncertainty_eigenvalue;
        d["min_sigma"] = r.min_sigma ? py::cast(*r.min_sigma) : py::none();
        return d;
      },
      py::arg("gamma"), py::arg("tol") = kDefaultTol);

  m.def(
      "symplectic_spectrum", [](const Eigen::MatrixXd& gamma) { return symplectic_spectrum(as_gamma(gamma)).values; },
      py::arg("gamma"), "Symplectic eigenvalues, descending.");

  m.def(
      "williamson",
      [](const Eigen::MatrixXd& gamma, double tol) {
        const auto w = williamson(as_gamma(gamma), tol);
        return py::make_tuple(w.spectrum.values, w.transform.matrix(), w.normal_form);
      },
      py::arg("gamma"), py::arg("tol") = kDefaultTol, "Returns (sigmas, S, S gamma S^T).");

  m.def(
      "reduce",
      [](const Eigen::MatrixXd& gamma, const std::vector<std::size_t>& keep) {
        return reduce(as_gamma(gamma), keep).matrix();
      },
      py::arg("gamma"), py::arg("keep"), "Covariance of the kept modes (0-based indices).");

  m.def(
      "random_symplectic", [](std::size_t n, std::uint64_t seed) { return random_symplectic(n, seed).matrix(); },
      py::arg("n"), py::arg("seed"));

  m.def(
      "mode_entropy", [](double sigma, const std::string& base) { return mode_entropy(sigma, parse_log_base(base)); },
      py::arg("sigma"), py::arg("base") = "bits");
  m.def("mean_occupation", &mean_occupation, py::arg("sigma"));
  m.def("thermal_parameter", &thermal_parameter, py::arg("sigma"));

  m.def(
      "entanglement_entropy",
      [](const Eigen::MatrixXd& gamma, const std::string& partition, const std::string& base,
         bool with_complement) {
        const CovarianceMatrix g(gamma);
        EntropyOptions options;
        options.base = parse_log_base(base);
        options.with_complement = with_complement;
        return report_dict(entanglement_entropy(g, ModePartition::parse(partition, g.modes()), options));
      },
      py::arg("gamma"), py::arg("partition"), py::arg("base") = "bits", py::arg("with_complement") = false,
      "Partition text is 'i,j|k,l' with 1-based modes.");

  m.def(
      "purity_check", [](const Eigen::MatrixXd& gamma, double tol) { return purity_check(as_gamma(gamma), tol); },
      py::arg("gamma"), py::arg("tol") = kDefaultTol);

  m.def(
      "two_oscillator_covariance",
      [](double mass, double omega, double lambda) {
        return ground_state_covariance(two_oscillator_model(mass, omega, lambda)).matrix();
      },
      py::arg("m") = 1.0, py::arg("omega") = 1.0, py::arg("lam") = 0.0);
  m.def(
      "chain_covariance",
      [](std::size_t n, double mass, double omega, double lambda, const std::string& boundary) {
        return ground_state_covariance(chain_model(n, mass, omega, lambda, parse_boundary(boundary))).matrix();
      },
      py::arg("n"), py::arg("m") = 1.0, py::arg("omega") = 1.0, py::arg("lam") = 0.0, py::arg("boundary") = "open");
  m.def(
      "normal_frequencies",
      [](std::size_t n, double mass, double omega, double lambda, const std::string& boundary) {
        return Eigen::VectorXd(normal_frequencies(chain_model(n, mass, omega, lambda, parse_boundary(boundary))));
      },
      py::arg("n"), py::arg("m") = 1.0, py::arg("omega") = 1.0, py::arg("lam") = 0.0, py::arg("boundary") = "open");

  m.def(
      "characteristic_function",
      [](const Eigen::MatrixXd& gamma, const Eigen::VectorXd& eta) {
        return characteristic_function(as_gamma(gamma), eta);
      },
      py::arg("gamma"), py::arg("eta"));
  m.def(
      "wigner_function",
      [](const Eigen::MatrixXd& gamma, const Eigen::VectorXd& x) { return wigner_function(as_gamma(gamma), x); },
      py::arg("gamma"), py::arg("x"));

  m.def("required_n_max", &fock::required_n_max, py::arg("beta"));
  m.def(
      "thermal_entropy_bruteforce",
      [](double beta, std::size_t n_max, const std::string& base) {
        return fock::thermal_entropy_bruteforce(beta, n_max, parse_log_base(base));
      },
      py::arg("beta"), py::arg("n_max"), py::arg("base") = "bits");
  m.def(
      "two_mode_squeezed_entropy",
      [](double beta, std::size_t n_max, const std::string& base) {
        return fock::two_mode_squeezed_entropy(beta, n_max, parse_log_base(base));
      },
      py::arg("beta"), py::arg("n_max"), py::arg("base") = "bits");

  m.def(
      "covariance_to_json", [](const Eigen::MatrixXd& gamma) { return io::covariance_to_json(as_gamma(gamma)).dump(); },
      py::arg("gamma"));
  m.def(
      "covariance_from_json",
      [](const std::string& text) {
        nlohmann::json doc;
        try {
          doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
          throw MalformedInput(e.what());
        }
        return io::covariance_from_json(doc).matrix();
      },
      py::arg("text"));
}
