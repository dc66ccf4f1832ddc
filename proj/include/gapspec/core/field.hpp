#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "gapspec/core/grid.hpp"

namespace gapspec {

using cplx = std::complex<double>;

// Complex field over a grid (ncomp components per node) or over an abstract
// coordinate space (restricted operators). The inner product carries the
// quadrature weight of its space:
//   <u,v> = weight * sum_i conj(u_i) v_i
// so discrete norms on grids approximate the L2 norm (weight = dx) and
// eigenbasis coordinates stay Euclidean (weight = 1).
struct SpinorField {
  std::vector<cplx> values;
  double weight = 1.0;
  int ncomp = 1;
  std::optional<Grid1D> grid;

  std::size_t size() const { return values.size(); }
};

SpinorField zero_like(const SpinorField& u);

double norm(const SpinorField& u);
cplx dot(const SpinorField& u, const SpinorField& v); // conj-linear in u
void axpy(cplx a, const SpinorField& x, SpinorField& y);
void scale_field(cplx a, SpinorField& u);
void normalize(SpinorField& u); // throws solver_error on zero field

// Difference norm ||u - v||.
double dist(const SpinorField& u, const SpinorField& v);

// Rotates u by a unit phase so its entry of largest magnitude is real and
// positive. Idempotent. No-op on the zero field.
void fix_phase(SpinorField& u);

} // namespace gapspec
