#include "gapspec/wells/wells.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gapspec/core/eigs.hpp"
#include "gapspec/core/errors.hpp"
#include "gapspec/core/resolvent.hpp"

namespace gapspec {

namespace {

double well_value(const WellSpec& ws, double x, double edge_tol) {
  const double lo = static_cast<double>(ws.h);
  if (ws.variant == 1) {
    const double hi = lo + 1.0;
    if (std::abs(x - lo) < edge_tol || std::abs(x - hi) < edge_tol) return -0.5;
    return (x > lo && x < hi) ? -1.0 : 0.0;
  }
  if (std::abs(x - lo) < edge_tol) return -0.5;
  return x > lo ? -1.0 : 0.0;
}

} // namespace

HermitianOperator assemble_schrodinger(const WellSpec& ws) {
  if (ws.variant != 1 && ws.variant != 2)
    throw config_error("wells.variant must be 1 or 2");
  if (ws.h < 1) throw config_error("wells.h must be a positive integer");
  if (!(ws.dx > 0.0)) throw config_error("wells.dx must be positive");
  const double need = static_cast<double>(ws.h) + (ws.variant == 1 ? 1.0 : 0.0) + 20.0;
  if (ws.length < need)
    throw config_error("wells.length leaves the well less than 20 units of decay room");

  const auto n = static_cast<std::size_t>(std::llround(ws.length / ws.dx)) - 1;
  if (n < 16) throw config_error("wells grid too small");
  const double dx = ws.length / static_cast<double>(n + 1);
  const double inv2 = 1.0 / (dx * dx);
  const double edge_tol = 1e-9 * dx;

  BandedHermitian m = BandedHermitian::zero(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = static_cast<double>(j + 1) * dx;
    m.diag[j] = 2.0 * inv2 + well_value(ws, x, edge_tol);
    if (j + 1 < n) m.bands[0][j] = -inv2;
  }

  HermitianOperator op;
  op.mat = std::move(m);
  op.weight = dx;
  op.ncomp = 1;
  op.provenance = "schrodinger_well(variant=" + std::to_string(ws.variant) +
                  ",h=" + std::to_string(ws.h) + ",L=" + std::to_string(ws.length) +
                  ",dx=" + std::to_string(dx) + ")";
  return op;
}

namespace {

// smallest eigenvalue below `upper`, by inertia bisection; requires at least
// one eigenvalue below `upper`.
double lowest_eig_below(const HermitianOperator& a, double lower, double upper,
                        double tol) {
  double lo = lower, hi = upper;
  if (eig_count_below(a, hi) == 0)
    throw solver_error("wells: no eigenvalue below " + std::to_string(upper));
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (eig_count_below(a, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace

double bound_state_energy(const WellSpec& ws, double tol) {
  if (ws.variant != 1)
    throw config_error("bound_state_energy: defined for variant 1 only");
  const HermitianOperator a = assemble_schrodinger(ws);
  const std::size_t negs = eig_count_in(a, -1.0, -1e-4);
  if (negs == 0)
    throw solver_error(
        "bound_state_energy: no eigenvalue found in (-1, 0); discretization too coarse");
  if (negs > 1)
    throw solver_error("bound_state_energy: expected a simple bound state, found " +
                       std::to_string(negs));
  return lowest_eig_below(a, -1.0, -1e-4, tol);
}

double spectrum_bottom(const WellSpec& ws, double tol) {
  const HermitianOperator a = assemble_schrodinger(ws);
  return lowest_eig_below(a, -1.5, a.mat.max_abs() + 1.0, tol);
}

double square_well_oracle_energy(double tol) {
  // even ground state of the full-line well of depth 1, width 1:
  //   k tan(k/2) = kappa,  k^2 + kappa^2 = 1,  mu = -kappa^2
  auto f = [](double k) {
    return k * std::tan(0.5 * k) - std::sqrt(1.0 - k * k);
  };
  double lo = 1e-8, hi = 1.0 - 1e-12;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double k = 0.5 * (lo + hi);
  return k * k - 1.0;
}

WellsReport srs_vs_spectrum_report(const std::vector<int>& h_list,
                                   double length, double dx, double shift) {
  if (h_list.empty()) throw config_error("wells.h_list is empty");
  for (std::size_t i = 1; i < h_list.size(); ++i)
    if (h_list[i] <= h_list[i - 1])
      throw config_error("wells.h_list must be strictly increasing");
  if (!(shift > 0.0)) throw config_error("wells shift must be positive");

  WellsReport rep;
  rep.h_list = h_list;
  rep.oracle_mu = square_well_oracle_energy();

  // free half-line Laplacian on the same grid
  const auto n = static_cast<std::size_t>(std::llround(length / dx)) - 1;
  const double dxe = length / static_cast<double>(n + 1);
  HermitianOperator free_op;
  free_op.mat = BandedHermitian::zero(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    free_op.mat.diag[j] = 2.0 / (dxe * dxe);
    if (j + 1 < n) free_op.mat.bands[0][j] = -1.0 / (dxe * dxe);
  }
  free_op.weight = dxe;
  free_op.ncomp = 1;
  free_op.provenance = "schrodinger_free(L=" + std::to_string(length) + ")";

  // probe supported in [0,1]: half-sine, unit weighted norm
  SpinorField f = free_op.make_field();
  for (std::size_t j = 0; j < free_op.dim(); ++j) {
    const double x = static_cast<double>(j + 1) * free_op.weight;
    if (x < 1.0) f.values[j] = std::sin(std::numbers::pi * x);
  }
  normalize(f);

  const ShiftedSolver free_solver(free_op, shift);
  const SpinorField u_free = free_solver.solve(f);

  for (int h : h_list) {
    WellSpec w1{1, h, length, dx};
    const HermitianOperator a1 = assemble_schrodinger(w1);
    rep.mu_h.push_back(bound_state_energy(w1));
    const SpinorField u1 = ShiftedSolver(a1, shift).solve(f);
    rep.resolvent_disc1.push_back(dist(u1, u_free));

    WellSpec w2{2, h, length, dx};
    const HermitianOperator a2 = assemble_schrodinger(w2);
    rep.bottom2.push_back(spectrum_bottom(w2));
    const SpinorField u2 = ShiftedSolver(a2, shift).solve(f);
    rep.resolvent_disc2.push_back(dist(u2, u_free));
  }

  for (double m1 : rep.mu_h) {
    rep.max_oracle_err = std::max(rep.max_oracle_err, std::abs(m1 - rep.oracle_mu));
    for (double m2 : rep.mu_h)
      rep.max_mu_spread = std::max(rep.max_mu_spread, std::abs(m1 - m2));
  }
  rep.resolvent_decreasing1 = true;
  for (std::size_t i = 1; i < rep.resolvent_disc1.size(); ++i)
    if (rep.resolvent_disc1[i] > rep.resolvent_disc1[i - 1] * (1.0 + 1e-9) + 1e-14)
      rep.resolvent_decreasing1 = false;
  rep.terminal_disc1 = rep.resolvent_disc1.back();
  rep.terminal_disc2 = rep.resolvent_disc2.back();
  return rep;
}

} // namespace gapspec
