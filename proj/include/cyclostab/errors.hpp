#pragma once

#include <stdexcept>
#include <string>

namespace cyclostab {

// Construction / precondition failures (bad parameters, dimension mismatch).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation outside a function's declared domain (poles, table limits).
struct DomainViolation : std::domain_error {
  using std::domain_error::domain_error;
};

// Numerical failures: divergent solves, non-finite states, stiffness aborts.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scenario-config parse or validation failures (maps to CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cyclostab
