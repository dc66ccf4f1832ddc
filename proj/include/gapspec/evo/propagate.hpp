#pragma once

#include <vector>

#include "gapspec/core/operator.hpp"
#include "gapspec/dirac/potential.hpp"
#include "gapspec/hom/experiments.hpp"

namespace gapspec {

struct EvolutionConfig {
  double dt = 0.01;
  std::size_t steps = 100;
  SpinorField u0;
};

struct Trajectory {
  SpinorField final;
  std::vector<double> norms;    // ||u_n|| per step, n = 1..steps
  std::vector<double> energies; // <u_n, A u_n> per step
};

// Crank-Nicolson (Cayley) stepping
//   u_{n+1} = (I + i dt/2 A)^{-1} (I - i dt/2 A) u_n,
// exactly unitary for Hermitian A in exact arithmetic. Each step solves the
// Hermitian positive definite normal system (I + (dt/2)^2 A^2) once; the
// factorization is reused across all steps.
Trajectory propagate(const HermitianOperator& a, const EvolutionConfig& cfg);

// Evolves the h-family and the homogenized operator from the same u0 and
// reports the deviation ||u_h(T) - u_hom(T)|| per h, with a trend flag.
enum class EvolutionOperator { full, point_restricted, cplus_restricted };

struct DynamicsResult {
  std::vector<int> h_list;
  std::vector<double> deviation;
  TrendReport trend;
};

DynamicsResult dynamics_homogenization(const Grid1D& grid,
                                       const PotentialSpec& spec,
                                       const std::vector<int>& h_list,
                                       const SpinorField& u0, double dt,
                                       double T,
                                       EvolutionOperator op_kind,
                                       const SrsOptions& opts);

// Banded product A*A (bandwidth doubles); helper for the normal system.
BandedHermitian banded_square(const BandedHermitian& a);

} // namespace gapspec
