#pragma once

#include <stdexcept>
#include <string>

namespace gapspec {

// Bad user-facing input (config fields, preconditions). Messages name the
// offending field.
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Linear-algebra failure (breakdown, non-convergence) with diagnostics.
struct solver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated an operator contract (e.g. indefinite system passed to a
// positive-definite solve, foreign projector).
struct contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace gapspec
