#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympent {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

/// Input is structurally broken (asymmetric, wrong shape, unparsable).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but not an admissible state (singular, unphysical).
class InvalidState : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class UnphysicalEigenvalue : public Error {
 public:
  UnphysicalEigenvalue(const std::string& what, double sigma) : Error(what), sigma_(sigma) {}
  double sigma() const noexcept { return sigma_; }

 private:
  double sigma_;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class NoGroundState : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Fock-space truncation left too much probability mass in the tail.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, std::size_t required_n_max)
      : Error(what), required_n_max_(required_n_max) {}
  std::size_t required_n_max() const noexcept { return required_n_max_; }

 private:
  std::size_t required_n_max_;
};

}  // namespace sympent
