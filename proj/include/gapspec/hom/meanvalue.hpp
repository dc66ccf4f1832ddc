#pragma once

#include "gapspec/core/grid.hpp"
#include "gapspec/dirac/potential.hpp"

namespace gapspec {

// Torus mean M(V2) = integral of V2 over the unit torus: the constant
// Fourier coefficient, exact by construction of V2Profile.
double mean_value(const V2Profile& v2);

// Compactly supported bump exp(-(x-center)^2/(2 sigma^2)) restricted to
// |x-center| <= halfwidth, zero outside. The support cut leaves a genuine
// boundary value; against an oscillation of frequency h that boundary term
// decays like 1/h, which is the rate the weak* studies fit.
struct BumpFunction {
  double center = 0.0;
  double sigma = 1.0 / 3.0;
  double halfwidth = 1.0 / 3.0;

  double eval(double x) const;
};

// | dx sum_j V2(h x_j) phi(x_j) - M(V2) dx sum_j phi(x_j) |  (grid quadrature
// of the weak* pairing). Throws config_error when the support of phi spills
// outside the grid domain.
double weak_star_probe(const V2Profile& v2, int h, const BumpFunction& phi,
                       const Grid1D& grid);

// Least-squares slope of log(y) vs log(x); entries with y below floor are
// skipped. Returns 0 when fewer than two usable points remain.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y,
                    double floor = 1e-300);

} // namespace gapspec
