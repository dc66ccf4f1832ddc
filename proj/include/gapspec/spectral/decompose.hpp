#pragma once

#include <cstdint>
#include <vector>

#include "gapspec/core/eigs.hpp"
#include "gapspec/core/operator.hpp"

namespace gapspec {

// Classification of an eigenvalue relative to the operator's gap interval
// (gap_lo, gap_hi) with an edge buffer delta_edge:
//   below: lambda <= gap_lo + delta_edge
//   gap:   inside (gap_lo + delta_edge, gap_hi - delta_edge)
//   above: lambda >= gap_hi - delta_edge
// Discrete operators have pure point spectrum; the below/above classes are
// the computable surrogates of the paper-level continuous parts.
enum class Band { below, gap, above };

enum class DecomposeMode { dense, windowed };

struct SpectralDecomposition {
  std::vector<double> eigenvalues; // ascending
  std::vector<SpinorField> vectors; // weighted-orthonormal, phase-fixed
  std::vector<Band> classification;
  double delta_edge = 0.05;
  double gap_lo = 0.0;
  double gap_hi = 2.0;
  bool complete = false; // dense mode: the full basis is present
  double max_residual = 0.0;

  std::size_t count(Band b) const;
  std::vector<std::size_t> indices(Band b) const;
};

// dense: full decomposition (dim <= 4096), complete basis.
// windowed: only the gap window plus edge bands of width edge_band around the
// gap boundaries are decomposed (arbitrary dimension, banded path).
SpectralDecomposition decompose(const HermitianOperator& a, DecomposeMode mode,
                                double delta_edge = 0.05,
                                double edge_band = 0.1, double tol = 1e-10);

// || A - sum_i lambda_i v_i v_i* || / ||A||, both operator norms estimated by
// power iteration on deterministic start vectors. Only meaningful for
// complete decompositions.
double reconstruction_error(const HermitianOperator& a,
                            const SpectralDecomposition& dec, int iters = 60);

} // namespace gapspec
