#pragma once

#include <stdexcept>
#include <string>

namespace normsim {

// Argument outside the mathematical domain of a formula (negative resource,
// non-positive effective price).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Structurally invalid input: bad sizes, out-of-range indices, bad
// generator or sampler parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A non-finite quantity appeared while iterating the dynamics.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, int step)
      : std::runtime_error(what + " at step " + std::to_string(step)), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Metric undefined for the given input (zero mean, degenerate fit).
class MetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bad configuration file, flag, or output location. The message names the key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace normsim
