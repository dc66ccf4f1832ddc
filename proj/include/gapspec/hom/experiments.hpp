#pragma once

#include <cstddef>
#include <vector>

#include "gapspec/core/eigs.hpp"
#include "gapspec/dirac/assemble.hpp"
#include "gapspec/hom/meanvalue.hpp"
#include "gapspec/spectral/projector.hpp"

namespace gapspec {

// The homogenized limit operator: same assembly with V2 replaced by its torus
// mean. When M(V2) = 0 this is exactly the unperturbed shifted operator.
HermitianOperator assemble_homogenized(const Grid1D& grid,
                                       const PotentialSpec& spec,
                                       bool shifted = true, double mass = 1.0);

// Trend assessment for h-sequences. "Converged" means monotone decreasing
// after the first entry and terminal value below
// max(tol_abs, tol_rel * scale).
struct TrendOptions {
  double tol_abs = 1e-6;
  double tol_rel = 1e-3;
};

struct TrendReport {
  bool decreasing = false;
  bool converged = false;
  double initial = 0.0;
  double terminal = 0.0;
};

TrendReport assess_trend(const std::vector<double>& seq, double scale,
                         const TrendOptions& opts);

// ---------------------------------------------------------------------------
// Strong-resolvent-sense convergence study on the positive restrictions.
// point: restriction to the gap eigenspaces (cheap at any dimension).
// cplus: restriction to the above-gap band (needs the dense path).
enum class SubspaceKind { point, cplus };

struct SrsOptions {
  double delta_edge = 0.05;
  double eig_tol = 1e-10;
  TrendOptions trend;
  bool shifted = true;
  int threads = 1;
};

struct SrsEntry {
  double shift = 0.0;
  std::size_t probe_index = 0;
  std::vector<double> discrepancy; // d_h per h in h_list order
  TrendReport trend;
};

struct SrsResult {
  std::vector<int> h_list;
  std::vector<SrsEntry> entries;
  bool all_decreasing = false;
  double max_terminal = 0.0;
};

SrsResult srs_study(const Grid1D& grid, const PotentialSpec& spec,
                    const std::vector<int>& h_list,
                    const std::vector<double>& shifts,
                    const std::vector<SpinorField>& probes,
                    SubspaceKind subspace, const SrsOptions& opts);

// ---------------------------------------------------------------------------
// Gap-eigenvalue homogenization sweep.
struct GapSweepOptions {
  double delta_edge = 0.05;
  double eig_tol = 1e-10;
  std::size_t k_max = 8;
  TrendOptions trend;
  bool shifted = true;
  int threads = 1;
  std::vector<double> shifts;      // resolvent-discrepancy column
  std::vector<SpinorField> probes; // resolvent-discrepancy column
};

struct SweepRow {
  int h = 0;
  std::vector<double> gap_eigs;
  std::vector<double> eig_errors;       // |lambda_h^k - lambda^k| per matched k
  std::vector<double> inv_eig_errors;   // |1/mu_h^k - 1/mu^k| (inverse convention)
  std::vector<double> sup_inverse_disc; // sup over limit eigenspace of ||K_h u - K u||
  double resolvent_disc = 0.0;          // max over (shift, probe)
  bool clustered = false;
  bool multiplicity_change = false;
};

struct GapSweepResult {
  std::vector<int> h_list;
  std::vector<double> hom_eigs; // gap eigenvalues of the homogenized operator
  std::vector<EigenPair> hom_pairs;
  std::vector<SweepRow> rows;           // sorted by h
  std::vector<double> fitted_rate;      // per k, log-error vs log-h slope
  std::vector<TrendReport> error_trend; // per k
  std::size_t matched_k = 0;            // ks matched across every h
  // terminal eigenpair (largest h), used by the consistency check
  std::vector<EigenPair> terminal_pairs;
};

// Throws solver_error when the homogenized operator has no gap eigenvalue
// (advises a larger Z), config_error on bad inputs. k_max = 0 yields rows
// carrying only resolvent data.
GapSweepResult gap_sweep(const Grid1D& grid, const PotentialSpec& spec,
                         const std::vector<int>& h_list,
                         const GapSweepOptions& opts);

// ---------------------------------------------------------------------------
// Inverse-compact eigenvalue bound, inverse convention lambda = 1/mu:
//   |lambda_h^k - lambda^k| <= c * lambda^k/(lambda^k - r) * s_h^k,  r := 0,
// fitted over every (h, k) of the sweep. Stability: refitting on the
// larger-h half of the sweep must keep c within a factor 2.
struct Lemma2Report {
  double fitted_c = 0.0;
  double fitted_c_tail = 0.0;
  bool stable = false;
  bool holds = false; // false when s = 0 with a nonzero left side
  std::vector<std::size_t> skipped_k;
};

Lemma2Report lemma2_check(const GapSweepResult& sweep);

// ---------------------------------------------------------------------------
// Consistency of the extrapolated limit pair with the homogenized problem.
// The terminal eigenvector is extrapolated by spectral smoothing (projection
// onto the homogenized point subspace, the discrete counterpart of passing to
// the weak limit, which removes the O(1/h) oscillatory corrector); the
// residual of the homogenized eigenproblem is then reported against a
// threshold of 10x the sweep's own terminal error.
struct GLimitReport {
  double mu = 0.0;
  double residual = 0.0;
  double threshold = 0.0;
  bool consistent = false;
};

GLimitReport glimit_consistency(const HermitianOperator& hom,
                                const std::vector<EigenPair>& hom_pairs,
                                const EigenPair& terminal_pair,
                                double terminal_eig_error);

// ---------------------------------------------------------------------------
// Spectral-projector convergence along the sweep for a set strictly inside
// the gap: weak pairings <E_h u, u> -> <E u, u> and strong actions
// ||E_h u - E u|| must vanish together (idempotence makes them equivalent).
struct ProjectorSweepReport {
  std::vector<double> weak_seq;
  std::vector<double> strong_seq;
  TrendReport weak_trend;
  TrendReport strong_trend;
  bool vanish_together = false;
};

ProjectorSweepReport projector_convergence(const Grid1D& grid,
                                           const PotentialSpec& spec,
                                           const std::vector<int>& h_list,
                                           const IntervalSet& gap_subset,
                                           const SpinorField& probe,
                                           const SrsOptions& opts);

// Gaussian probe field on the grid (upper spinor component), unit norm.
SpinorField gaussian_probe(const Grid1D& grid, double center, double sigma,
                           int ncomp = 2, int component = 0);

} // namespace gapspec
