#include "gapspec/hom/meanvalue.hpp"

#include <cmath>

#include "gapspec/core/errors.hpp"

namespace gapspec {

double mean_value(const V2Profile& v2) { return v2.mean; }

double BumpFunction::eval(double x) const {
  const double d = x - center;
  if (std::abs(d) > halfwidth) return 0.0;
  return std::exp(-d * d / (2.0 * sigma * sigma));
}

double weak_star_probe(const V2Profile& v2, int h, const BumpFunction& phi,
                       const Grid1D& grid) {
  if (h < 1) throw config_error("weak_star_probe: h must be >= 1");
  if (phi.center - phi.halfwidth <= -grid.L ||
      phi.center + phi.halfwidth >= grid.L)
    throw config_error("weak_star_probe: phi support spills outside the grid domain");
  const double m = mean_value(v2);
  double acc = 0.0;
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double x = grid.node(j);
    const double p = phi.eval(x);
    if (p == 0.0) continue;
    acc += (v2.eval(static_cast<double>(h) * x) - m) * p;
  }
  return std::abs(grid.dx * acc);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y,
                    double floor) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(y[i] > floor) || !(x[i] > 0.0)) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 2) return 0.0;
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (static_cast<double>(m) * sxy - sx * sy) / denom;
}

} // namespace gapspec
