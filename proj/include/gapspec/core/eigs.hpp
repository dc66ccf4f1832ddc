#pragma once

#include <cstdint>
#include <vector>

#include "gapspec/core/operator.hpp"

namespace gapspec {

struct EigenPair {
  double value = 0.0;
  SpinorField vector; // unit weighted norm, phase-fixed
  double residual = 0.0; // ||A v - value v|| / ||v||
};

struct InteriorResult {
  std::vector<EigenPair> pairs; // ascending by value
  std::size_t certified_count = 0; // inertia(hi) - inertia(lo)
  bool complete = false; // every certified eigenvalue extracted
  bool edge_warning = false; // spectrum clusters hug a window endpoint
};

// Eigenvalue counting through the inertia of shifted LDL^H factorizations
// (Sylvester's law). Counts are exact for exact arithmetic; shifts landing on
// an eigenvalue are nudged deterministically.
std::size_t eig_count_below(const HermitianOperator& a, double t);
std::size_t eig_count_in(const HermitianOperator& a, double lo, double hi);

// Smallest |eigenvalue|, by inertia bisection on symmetric windows (-t, t).
// Pure counting; no eigenvectors involved.
double min_abs_eigenvalue(const HermitianOperator& a, double tol = 1e-12);

// All eigenvalues of the discretized operator in (lo, hi), each with an
// eigenvector and residual. Spectrum slicing isolates eigenvalues by inertia
// bisection, then shift-inverted Rayleigh-quotient iteration converges each
// one; completeness is certified against the endpoint inertia difference.
// Residual acceptance: ||A v - r v|| <= tol * max(1, |r|).
InteriorResult interior_eigs(const HermitianOperator& a, double lo, double hi,
                             std::size_t k_max, double tol,
                             std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

// Dense full decomposition (the mandatory oracle path for dim <= 512 and the
// dense mode of spectral decompositions). Vectors are orthonormal in the
// weighted inner product and phase-fixed.
struct DenseEigResult {
  std::vector<double> values;
  std::vector<std::vector<cplx>> vectors;
};
DenseEigResult dense_eig(const HermitianOperator& a);

// Small dense Hermitian eigensolve by cyclic complex Jacobi (independent of
// the dense oracle path; backs Rayleigh-Ritz blocks and Gram-matrix norms).
// h is row-major m x m; vectors come back column-major, values ascending.
struct SmallEigResult {
  std::vector<double> values;
  std::vector<cplx> vectors;
};
SmallEigResult small_hermitian_eig(std::vector<cplx> h, std::size_t m);

constexpr std::size_t kDenseDimLimit = 4096;

} // namespace gapspec
