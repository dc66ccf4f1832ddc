#include "gapspec/spectral/projector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "gapspec/core/errors.hpp"

namespace gapspec {

SpinorField Projector::apply(const SpinorField& u) const {
  SpinorField r = zero_like(u);
  for (const auto& v : basis) axpy(dot(v, u), v, r);
  return r;
}

namespace {

Projector from_indices(const SpectralDecomposition& dec,
                       const std::vector<std::size_t>& idx) {
  Projector p;
  p.space_dim = dec.vectors.empty() ? 0 : dec.vectors.front().size();
  p.basis.reserve(idx.size());
  for (std::size_t i : idx) p.basis.push_back(dec.vectors[i]);
  return p;
}

} // namespace

Projector point_projector(const SpectralDecomposition& dec) {
  return from_indices(dec, dec.indices(Band::gap));
}

std::pair<Projector, Projector> continuous_split(const SpectralDecomposition& dec) {
  return {from_indices(dec, dec.indices(Band::below)),
          from_indices(dec, dec.indices(Band::above))};
}

IntervalSet IntervalSet::interval(double lo, double hi) {
  IntervalSet s;
  if (lo < hi) s.parts.emplace_back(lo, hi);
  return s;
}

IntervalSet IntervalSet::below(double hi) {
  return interval(-std::numeric_limits<double>::infinity(), hi);
}

IntervalSet IntervalSet::all() {
  return interval(-std::numeric_limits<double>::infinity(),
                  std::numeric_limits<double>::infinity());
}

bool IntervalSet::contains(double x) const {
  for (const auto& [lo, hi] : parts)
    if (x >= lo && x < hi) return true;
  return false;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<std::pair<double, double>> all = parts;
  all.insert(all.end(), o.parts.begin(), o.parts.end());
  std::sort(all.begin(), all.end());
  IntervalSet r;
  for (const auto& p : all) {
    if (!r.parts.empty() && p.first <= r.parts.back().second) {
      r.parts.back().second = std::max(r.parts.back().second, p.second);
    } else {
      r.parts.push_back(p);
    }
  }
  return r;
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  IntervalSet r;
  for (const auto& [alo, ahi] : parts)
    for (const auto& [blo, bhi] : o.parts) {
      const double lo = std::max(alo, blo);
      const double hi = std::min(ahi, bhi);
      if (lo < hi) r.parts.emplace_back(lo, hi);
    }
  std::sort(r.parts.begin(), r.parts.end());
  return r;
}

bool IntervalSet::disjoint_from(const IntervalSet& o) const {
  return intersect(o).parts.empty();
}

Projector spectral_projector(const SpectralDecomposition& dec,
                             const IntervalSet& set) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dec.eigenvalues.size(); ++i)
    if (set.contains(dec.eigenvalues[i])) idx.push_back(i);
  return from_indices(dec, idx);
}

HermitianOperator restrict_operator(const HermitianOperator& a,
                                    const Projector& p, bool negate,
                                    double commute_tol, const char* label) {
  const double scale = std::max(1.0, a.mat.max_abs());
  const std::size_t r = p.rank();
  BandedHermitian m = BandedHermitian::zero(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    const SpinorField& v = p.basis[i];
    SpinorField av = apply(a, v);
    const double rho = dot(v, av).real() / dot(v, v).real();
    SpinorField res = av;
    axpy(cplx(-rho, 0.0), v, res);
    const double rn = norm(res) / norm(v);
    if (rn > commute_tol * scale)
      throw contract_error(std::string("restrict_operator: projector does not "
                                       "commute with the operator (||AP-PA|| ~ ") +
                           std::to_string(rn) + ")");
    m.diag[i] = negate ? -rho : rho;
  }
  HermitianOperator out;
  out.mat = std::move(m);
  out.weight = 1.0; // coefficients against a weighted-orthonormal basis
  out.ncomp = 1;
  out.provenance = std::string(label) + "(" + a.provenance + ")";
  return out;
}

SpinorField to_basis_coords(const Projector& p, const SpinorField& u) {
  SpinorField c;
  c.weight = 1.0;
  c.values.resize(p.rank());
  for (std::size_t i = 0; i < p.rank(); ++i) c.values[i] = dot(p.basis[i], u);
  return c;
}

SpinorField from_basis_coords(const Projector& p, const SpinorField& coeffs) {
  if (coeffs.size() != p.rank())
    throw contract_error("from_basis_coords: coefficient count != rank");
  if (p.basis.empty()) {
    SpinorField z;
    z.weight = 1.0;
    return z;
  }
  SpinorField r = zero_like(p.basis.front());
  for (std::size_t i = 0; i < p.rank(); ++i)
    axpy(coeffs.values[i], p.basis[i], r);
  return r;
}

SpinorField projected_resolvent(const std::vector<EigenPair>& pairs,
                                const SpinorField& f, double shift) {
  SpinorField r = zero_like(f);
  for (const auto& p : pairs)
    axpy(dot(p.vector, f) / (p.value + shift), p.vector, r);
  return r;
}

SpinorField projected_inverse(const std::vector<EigenPair>& pairs,
                              const SpinorField& f) {
  SpinorField r = zero_like(f);
  for (const auto& p : pairs) axpy(dot(p.vector, f) / p.value, p.vector, r);
  return r;
}

SpinorField projected(const std::vector<EigenPair>& pairs, const SpinorField& f) {
  SpinorField r = zero_like(f);
  for (const auto& p : pairs) axpy(dot(p.vector, f), p.vector, r);
  return r;
}

double MeasureReport::max_any() const {
  double m = idempotence;
  m = std::max(m, self_adjointness);
  m = std::max(m, contraction);
  m = std::max(m, intersection);
  m = std::max(m, modularity);
  m = std::max(m, additivity);
  m = std::max(m, monotonicity);
  if (completeness_checked) m = std::max(m, completeness);
  return m;
}

MeasureReport measure_properties(const SpectralDecomposition& dec,
                                 const std::vector<IntervalSet>& sets,
                                 std::size_t probe_count, std::uint64_t seed) {
  MeasureReport rep;
  if (dec.vectors.empty()) return rep;
  const std::size_t dim = dec.vectors.front().size();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<SpinorField> probes;
  probes.reserve(probe_count);
  for (std::size_t i = 0; i < probe_count; ++i) {
    SpinorField v = zero_like(dec.vectors.front());
    for (auto& z : v.values) z = cplx(gauss(rng), gauss(rng));
    normalize(v);
    probes.push_back(std::move(v));
  }

  std::vector<Projector> proj;
  proj.reserve(sets.size());
  for (const auto& s : sets) proj.push_back(spectral_projector(dec, s));

  // projector algebra on every E(set)
  for (std::size_t k = 0; k < proj.size(); ++k) {
    const Projector& p = proj[k];
    for (const auto& u : probes) {
      SpinorField pu = p.apply(u);
      SpinorField ppu = p.apply(pu);
      rep.idempotence = std::max(rep.idempotence, dist(ppu, pu));
      rep.contraction = std::max(rep.contraction, norm(pu) - norm(u));
    }
    for (std::size_t i = 0; i + 1 < probes.size(); i += 2) {
      const cplx lhs = dot(p.apply(probes[i]), probes[i + 1]);
      const cplx rhs = dot(probes[i], p.apply(probes[i + 1]));
      rep.self_adjointness = std::max(rep.self_adjointness, std::abs(lhs - rhs));
    }
  }

  // pairwise set identities
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      const Projector pi = spectral_projector(dec, sets[i].intersect(sets[j]));
      const Projector pu = spectral_projector(dec, sets[i].unite(sets[j]));
      for (const auto& u : probes) {
        SpinorField prod = proj[i].apply(proj[j].apply(u));
        rep.intersection = std::max(rep.intersection, dist(pi.apply(u), prod));
        // modularity: E(u)+E(n) = E(1)+E(2)
        SpinorField lhs = pu.apply(u);
        axpy(cplx(1.0, 0.0), pi.apply(u), lhs);
        SpinorField rhs = proj[i].apply(u);
        axpy(cplx(1.0, 0.0), proj[j].apply(u), rhs);
        rep.modularity = std::max(rep.modularity, dist(lhs, rhs));
        if (sets[i].disjoint_from(sets[j]))
          rep.additivity = std::max(rep.additivity, dist(pu.apply(u), rhs));
      }
    }
  }

  // monotonicity of lambda -> E((-inf, lambda)) over set endpoints
  std::vector<double> cuts;
  for (const auto& s : sets)
    for (const auto& [lo, hi] : s.parts) {
      if (std::isfinite(lo)) cuts.push_back(lo);
      if (std::isfinite(hi)) cuts.push_back(hi);
    }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Projector p1 = spectral_projector(dec, IntervalSet::below(cuts[i]));
    const Projector p2 = spectral_projector(dec, IntervalSet::below(cuts[i + 1]));
    for (const auto& u : probes) {
      // E(l1) E(l2) = E(l1) for l1 <= l2
      SpinorField lhs = p1.apply(p2.apply(u));
      rep.monotonicity = std::max(rep.monotonicity, dist(lhs, p1.apply(u)));
    }
  }

  if (dec.complete && dec.vectors.size() == dim) {
    const Projector pall = spectral_projector(dec, IntervalSet::all());
    for (const auto& u : probes)
      rep.completeness = std::max(rep.completeness, dist(pall.apply(u), u));
    rep.completeness_checked = true;
  }
  return rep;
}

} // namespace gapspec
