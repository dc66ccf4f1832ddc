#include "gapspec/core/grid.hpp"

#include "gapspec/core/errors.hpp"

namespace gapspec {

Grid1D make_grid(double L, std::size_t n) {
  if (!(L > 0.0)) throw config_error("grid.L must be positive");
  if (n < 8) throw config_error("grid.n must be at least 8");
  if (n % 2 != 0) throw config_error("grid.n must be even");
  Grid1D g;
  g.L = L;
  g.n = n;
  g.dx = 2.0 * L / static_cast<double>(n + 1);
  return g;
}

} // namespace gapspec
