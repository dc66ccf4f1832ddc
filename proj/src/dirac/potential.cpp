#include "gapspec/dirac/potential.hpp"

#include <cmath>
#include <numbers>

#include "gapspec/core/errors.hpp"

namespace gapspec {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_unit(double y) {
  const double f = y - std::floor(y);
  return f;
}
} // namespace

double V2Profile::eval(double y) const {
  const double yw = wrap_unit(y);
  double v = mean;
  for (const auto& [k, a] : cosines) v += a * std::cos(kTwoPi * k * yw);
  for (const auto& [k, b] : sines) v += b * std::sin(kTwoPi * k * yw);
  return v;
}

double V2Profile::sup_bound() const {
  double s = std::abs(mean);
  for (const auto& [k, a] : cosines) s += std::abs(a);
  for (const auto& [k, b] : sines) s += std::abs(b);
  return s;
}

V2Profile V2Profile::translated(double s) const {
  // cos(2 pi k (y+s)) = cos(2 pi k s) cos(..y) - sin(2 pi k s) sin(..y)
  V2Profile t;
  t.mean = mean;
  for (const auto& [k, a] : cosines) {
    t.cosines.emplace_back(k, a * std::cos(kTwoPi * k * s));
    t.sines.emplace_back(k, -a * std::sin(kTwoPi * k * s));
  }
  for (const auto& [k, b] : sines) {
    t.sines.emplace_back(k, b * std::cos(kTwoPi * k * s));
    t.cosines.emplace_back(k, b * std::sin(kTwoPi * k * s));
  }
  return t;
}

namespace {
double inv_reg(double x, double eps) { return 1.0 / std::max(std::abs(x), eps); }
} // namespace

double eval_vh(const PotentialSpec& spec, double x) {
  if (spec.g == 0.0) return 0.0;
  if (!(spec.epsilon_reg > 0.0))
    throw config_error("potential.epsilon_reg must be resolved (positive) before sampling");
  return spec.g * inv_reg(x, spec.epsilon_reg) *
         spec.v2.eval(static_cast<double>(spec.h) * x);
}

double eval_potential(const PotentialSpec& spec, double x) {
  if (!(spec.epsilon_reg > 0.0))
    throw config_error("potential.epsilon_reg must be resolved (positive) before sampling");
  const double w = -spec.Z * inv_reg(x, spec.epsilon_reg);
  return w + eval_vh(spec, x);
}

AdmissibilityReport check_admissible(const PotentialSpec& spec, double a,
                                     double b) {
  AdmissibilityReport r;
  r.a = a;
  r.b = b;
  r.v2_sup_bound = spec.v2.sup_bound();
  // As x -> 0 the bound a c/(2|x|) + b is dominated by the 1/|x| part, so with
  // c = 1 the Coulomb condition reduces to Z <= a/2 independently of b.
  r.coulomb_margin = 0.5 * a - spec.Z;
  r.coulomb_ok = r.coulomb_margin >= 0.0;
  r.combined_margin = 0.5 * a - (spec.Z + std::abs(spec.g) * r.v2_sup_bound);
  r.combined_ok = r.combined_margin >= 0.0;
  return r;
}

HomogeneityReport homogeneity_check(
    const PotentialSpec& spec,
    const std::vector<std::pair<double, double>>& samples, double rel_tol) {
  HomogeneityReport rep;
  const double eps = spec.epsilon_reg;
  for (const auto& [x, a] : samples) {
    if (!(a > 0.0)) {
      ++rep.skipped;
      continue;
    }
    if (eps > 0.0 && (std::abs(x) <= eps || std::abs(a * x) <= eps)) {
      ++rep.skipped;
      continue;
    }
    if (x == 0.0) {
      ++rep.skipped;
      continue;
    }
    const double lhs = spec.g / std::abs(a * x);
    const double rhs = (spec.g / std::abs(x)) / a;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    const double err = std::abs(lhs - rhs) / scale;
    rep.max_rel_err = std::max(rep.max_rel_err, err);
    ++rep.checked;
    if (err > rel_tol) rep.passed = false;
  }
  return rep;
}

PotentialSpec resolve_regularization(const PotentialSpec& spec,
                                     const Grid1D& grid) {
  PotentialSpec r = spec;
  if (r.epsilon_reg == 0.0) r.epsilon_reg = 2.0 * grid.dx;
  if (r.epsilon_reg < grid.dx)
    throw config_error("potential.epsilon_reg is smaller than the grid spacing");
  if (r.h < 1) throw config_error("potential.h must be a positive integer");
  return r;
}

} // namespace gapspec
