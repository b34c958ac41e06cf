#pragma once

#include <stdexcept>
#include <string>

namespace rdi {

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A requested evaluation point lies outside a family's validity domain
// (superluminal trajectory, p0 - pz <= 0, non-positive density...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Psi is not invertible; carries |Psi tilde(Psi)| at the offending point.
struct SingularityError : std::runtime_error {
  double magnitude;
  SingularityError(const std::string& what, double mag)
      : std::runtime_error(what), magnitude(mag) {}
};

// Raised for bad configurations, including integrator step sizes.
struct ConfigError : std::runtime_error {
  std::string field;
  ConfigError(const std::string& what, std::string key = {})
      : std::runtime_error(what), field(std::move(key)) {}
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rdi
