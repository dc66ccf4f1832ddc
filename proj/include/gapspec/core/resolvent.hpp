#pragma once

#include "gapspec/core/operator.hpp"

namespace gapspec {

// Factored (A + shift I)^{-1} for positive definite A + shift I.
// Construction throws contract_error when the shifted matrix is indefinite;
// solves check their own residual and throw solver_error on breakdown.
class ShiftedSolver {
 public:
  ShiftedSolver(const HermitianOperator& a, double shift);

  // u with ||(A + shift)u - v|| <= tol ||v||. One step of iterative
  // refinement is applied if the direct solve misses the tolerance.
  SpinorField solve(const SpinorField& v, double tol = 1e-12) const;

  double shift() const { return shift_; }
  std::size_t dim() const { return a_->dim(); }

 private:
  const HermitianOperator* a_;
  double shift_;
  BandedCholesky chol_;
};

// One-shot convenience wrapper around ShiftedSolver.
SpinorField resolvent_solve(const HermitianOperator& a, double shift,
                            const SpinorField& v, double tol = 1e-12);

} // namespace gapspec
