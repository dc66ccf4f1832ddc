#pragma once

#include <cstddef>

namespace gapspec {

// Uniform grid of n interior nodes on (-L, L), homogeneous Dirichlet at the
// two cut ends. n is kept even so the origin falls between the two middle
// nodes and singular 1/|x| potentials are never sampled at 0.
struct Grid1D {
  double L = 0.0;
  std::size_t n = 0;
  double dx = 0.0; // 2L/(n+1)

  double node(std::size_t j) const { return -L + static_cast<double>(j + 1) * dx; }
};

// Throws config_error naming the offending field.
Grid1D make_grid(double L, std::size_t n);

} // namespace gapspec
