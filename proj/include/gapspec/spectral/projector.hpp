#pragma once

#include <utility>
#include <vector>

#include "gapspec/spectral/decompose.hpp"

namespace gapspec {

// Orthogonal projector P u = sum_i <v_i, u> v_i onto the span of a
// weighted-orthonormal basis.
struct Projector {
  std::vector<SpinorField> basis;
  std::size_t space_dim = 0; // dimension of the ambient space

  std::size_t rank() const { return basis.size(); }
  SpinorField apply(const SpinorField& u) const;
};

// Projector onto the gap-classified eigenspaces (the point part). Empty when
// no gap eigenvalue exists.
Projector point_projector(const SpectralDecomposition& dec);

// (P_minus, P_plus): spans of the below/above classified eigenvectors, the
// surrogates of the negative and positive continuous subspaces.
std::pair<Projector, Projector> continuous_split(const SpectralDecomposition& dec);

// Finite union of half-open intervals [lo, hi) on the real line.
struct IntervalSet {
  std::vector<std::pair<double, double>> parts; // disjoint, sorted

  static IntervalSet interval(double lo, double hi);
  static IntervalSet below(double hi); // (-inf, hi)
  static IntervalSet all();

  bool contains(double x) const;
  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  bool disjoint_from(const IntervalSet& o) const;
};

// E(set): projector onto eigenvectors with eigenvalue in the set.
Projector spectral_projector(const SpectralDecomposition& dec,
                             const IntervalSet& set);

// Compression P A P expressed in P's basis (negated when negate is set):
// diagonal with the Rayleigh quotients of the basis vectors. The basis must
// consist of eigenvectors of A; each basis vector's eigenresidual is checked
// against commute_tol and a violation throws contract_error.
HermitianOperator restrict_operator(const HermitianOperator& a,
                                    const Projector& p, bool negate,
                                    double commute_tol = 1e-8,
                                    const char* label = "restricted");

// Coefficients of u against the projector basis and back.
SpinorField to_basis_coords(const Projector& p, const SpinorField& u);
SpinorField from_basis_coords(const Projector& p, const SpinorField& coeffs);

// Actions assembled from explicit eigenpairs (the point/plus restricted
// resolvents used by the convergence studies):
//   projected_resolvent: sum v_i <v_i,f> / (lambda_i + shift)
//   projected_inverse:   sum v_i <v_i,f> / lambda_i
//   projected:           sum v_i <v_i,f>
SpinorField projected_resolvent(const std::vector<EigenPair>& pairs,
                                const SpinorField& f, double shift);
SpinorField projected_inverse(const std::vector<EigenPair>& pairs,
                              const SpinorField& f);
SpinorField projected(const std::vector<EigenPair>& pairs, const SpinorField& f);

// Spectral-measure algebra report (intersection-multiplicativity, modularity,
// additivity on disjoint sets, monotonicity of E((-inf,lambda)), completeness,
// projector algebra). Discrepancies are action norms on unit probes; below
// dimension 513 dense Frobenius comparisons are used as well.
struct MeasureReport {
  double idempotence = 0.0;
  double self_adjointness = 0.0;
  double contraction = 0.0; // max(||Pu|| - ||u||, 0)
  double intersection = 0.0;
  double modularity = 0.0;
  double additivity = 0.0;
  double monotonicity = 0.0;
  double completeness = 0.0; // ||E(R)u - u||
  bool completeness_checked = false;
  double max_any() const;
  bool passed(double tol) const { return max_any() <= tol; }
};

MeasureReport measure_properties(const SpectralDecomposition& dec,
                                 const std::vector<IntervalSet>& sets,
                                 std::size_t probe_count = 16,
                                 std::uint64_t seed = 7777);

} // namespace gapspec
