#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gapspec/core/banded.hpp"
#include "gapspec/core/field.hpp"
#include "gapspec/core/grid.hpp"

namespace gapspec {

// Discretized self-adjoint operator. Immutable after assembly; all solves are
// pure functions of it, so instances may be shared across threads.
struct HermitianOperator {
  BandedHermitian mat;
  double weight = 1.0; // quadrature weight of the space it acts on
  int ncomp = 1;
  std::optional<Grid1D> grid;
  std::optional<std::pair<double, double>> gap_hint;
  std::string provenance;

  std::size_t dim() const { return mat.dim; }

  SpinorField make_field() const;
};

// v = A u. Throws contract_error on dimension mismatch.
SpinorField apply(const HermitianOperator& a, const SpinorField& u);

} // namespace gapspec
