#pragma once

#include "gapspec/core/operator.hpp"
#include "gapspec/dirac/potential.hpp"

namespace gapspec {

// Two-component Dirac operator on the grid,
//   H = -i sigma_1 d/dx + sigma_3 m + (W + V_h) C,
// with C = I (scalar coupling) or sigma_3 (beta-type coupling), homogeneous
// Dirichlet at +/-L. The derivative couples the components by forward/backward
// one-sided differences (upper row sees the forward difference of the lower
// component, lower row the backward difference of the upper), which keeps the
// matrix Hermitian and the discrete symbol injective across the Brillouin
// zone, so no spurious branch enters the gap. shifted adds +mc^2 I, moving the
// free gap from (-1,1) to (0,2).
//
// mass is 1 in the paper's units; it is a parameter so the massless (chiral)
// kinetic matrix can be exercised on its own.
HermitianOperator assemble_dirac_1d(const Grid1D& grid, const PotentialSpec& spec,
                                    bool shifted, double mass = 1.0);

} // namespace gapspec
