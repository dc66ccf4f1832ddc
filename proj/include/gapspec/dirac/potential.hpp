#pragma once

#include <utility>
#include <vector>

#include "gapspec/core/grid.hpp"

namespace gapspec {

// 1-periodic profile on the unit torus held as finite Fourier data, so its
// mean is the constant coefficient exactly and no commensurability with any
// grid is ever needed.
struct V2Profile {
  double mean = 1.0;
  std::vector<std::pair<int, double>> cosines; // (k, a_k): a_k cos(2 pi k y)
  std::vector<std::pair<int, double>> sines;   // (k, b_k): b_k sin(2 pi k y)

  double eval(double y) const;
  // |mean| + sum |a_k| + |b_k|, an upper bound for sup |V2|
  double sup_bound() const;
  // profile of y -> V2(y + s); the mean coefficient is untouched
  V2Profile translated(double s) const;
};

enum class Coupling { scalar, beta };

// Declarative description of the potential stack
//   W(x) = -Z/|x|,  V_h(x) = V1(x) V2(h x),  V1(x) = g/|x|,
// with 1/|x| regularized to 1/max(|x|, epsilon_reg).
// epsilon_reg = 0 means "resolve to 2*dx at assembly time".
struct PotentialSpec {
  double Z = 0.0;
  double g = 0.0;
  V2Profile v2;
  int h = 1;
  double epsilon_reg = 0.0;
  Coupling coupling = Coupling::scalar;
};

// Scalar value W(x) + V1(x) V2(h x). Requires a resolved (positive)
// epsilon_reg; assembly resolves defaults before sampling.
double eval_potential(const PotentialSpec& spec, double x);

// The pure oscillating factor V1(x) V2(h x) (no Coulomb term).
double eval_vh(const PotentialSpec& spec, double x);

struct AdmissibilityReport {
  bool coulomb_ok = false;  // Z <= a/2 (c = 1)
  bool combined_ok = false; // Z + |g| sup|V2| <= a/2
  double coulomb_margin = 0.0;
  double combined_margin = 0.0;
  double v2_sup_bound = 0.0;
  double a = 0.0, b = 0.0;
  bool admissible() const { return coulomb_ok && combined_ok; }
};

// Checks the relative bound |entry| <= a/(2|x|) + b for the Coulomb term and
// the combined Coulomb + oscillating strength. A report, never a throw.
AdmissibilityReport check_admissible(const PotentialSpec& spec, double a,
                                     double b);

struct HomogeneityReport {
  bool passed = true;
  double max_rel_err = 0.0;
  std::size_t checked = 0;
  std::size_t skipped = 0; // samples inside the regularized core
};

// Verifies V1(a x) = V1(x)/a on (x, a) sample pairs with a > 0, skipping any
// pair that touches the regularized core.
HomogeneityReport homogeneity_check(
    const PotentialSpec& spec,
    const std::vector<std::pair<double, double>>& samples, // (x, dilation a)
    double rel_tol = 1e-12);

// spec with epsilon_reg defaulted to 2*dx when unset; throws config_error
// when the resolved value is below dx.
PotentialSpec resolve_regularization(const PotentialSpec& spec,
                                     const Grid1D& grid);

} // namespace gapspec
