#include "gapspec/core/resolvent.hpp"

#include <cmath>
#include <string>

#include "gapspec/core/errors.hpp"

namespace gapspec {

ShiftedSolver::ShiftedSolver(const HermitianOperator& a, double shift)
    : a_(&a), shift_(shift), chol_(BandedCholesky::factor(a.mat.shifted(shift))) {}

SpinorField ShiftedSolver::solve(const SpinorField& v, double tol) const {
  if (v.values.size() != a_->dim())
    throw contract_error("ShiftedSolver: dimension mismatch");
  const double nv = norm(v);
  SpinorField u = v;
  if (nv == 0.0) return u;
  chol_.solve_inplace(u.values.data());

  auto residual = [&](const SpinorField& x) {
    SpinorField r = apply(*a_, x);
    axpy(cplx(shift_, 0.0), x, r);
    axpy(cplx(-1.0, 0.0), v, r);
    return r;
  };

  SpinorField r = residual(u);
  double nr = norm(r);
  if (nr > tol * nv) {
    // one round of iterative refinement
    chol_.solve_inplace(r.values.data());
    axpy(cplx(-1.0, 0.0), r, u);
    nr = norm(residual(u));
  }
  if (nr > tol * nv)
    throw solver_error("resolvent solve did not reach tolerance: residual " +
                       std::to_string(nr / nv) + " after refinement (dim " +
                       std::to_string(a_->dim()) + ", shift " +
                       std::to_string(shift_) + ")");
  return u;
}

SpinorField resolvent_solve(const HermitianOperator& a, double shift,
                            const SpinorField& v, double tol) {
  return ShiftedSolver(a, shift).solve(v, tol);
}

} // namespace gapspec
