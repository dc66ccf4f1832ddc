#include "gapspec/core/operator.hpp"

#include "gapspec/core/errors.hpp"

namespace gapspec {

SpinorField HermitianOperator::make_field() const {
  SpinorField f;
  f.values.assign(dim(), cplx(0.0, 0.0));
  f.weight = weight;
  f.ncomp = ncomp;
  f.grid = grid;
  return f;
}

SpinorField apply(const HermitianOperator& a, const SpinorField& u) {
  if (u.values.size() != a.dim())
    throw contract_error("apply: operator/field dimension mismatch");
  SpinorField v = a.make_field();
  a.mat.apply(u.values.data(), v.values.data());
  return v;
}

} // namespace gapspec
