#include "gapspec/evo/propagate.hpp"

#include <cmath>

#include "gapspec/core/errors.hpp"
#include "gapspec/spectral/decompose.hpp"

namespace gapspec {

BandedHermitian banded_square(const BandedHermitian& a) {
  const std::size_t n = a.dim;
  const int bw2 = 2 * a.bw;
  BandedHermitian c = BandedHermitian::zero(n, bw2);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t jmin = i >= static_cast<std::size_t>(bw2) ? i - bw2 : 0;
    for (std::size_t j = jmin; j <= i; ++j) {
      cplx s = 0.0;
      const std::size_t kmin =
          std::max(i >= static_cast<std::size_t>(a.bw) ? i - a.bw : 0,
                   j >= static_cast<std::size_t>(a.bw) ? j - a.bw : 0);
      const std::size_t kmax = std::min({n - 1, i + a.bw, j + a.bw});
      for (std::size_t k = kmin; k <= kmax; ++k) s += a.at(i, k) * a.at(k, j);
      if (i == j)
        c.diag[i] = s.real();
      else
        c.set_lower(i, j, s);
    }
  }
  return c;
}

Trajectory propagate(const HermitianOperator& a, const EvolutionConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw config_error("evolution.dt must be positive");
  if (cfg.u0.values.size() != a.dim())
    throw contract_error("propagate: u0/operator dimension mismatch");
  if (norm(cfg.u0) == 0.0) throw config_error("evolution.u0 must be nonzero");

  const double tau = 0.5 * cfg.dt;
  // (I - i tau A)(I + i tau A) = I + tau^2 A^2: Hermitian positive definite
  BandedHermitian b = banded_square(a.mat);
  for (auto& v : b.diag) v = 1.0 + tau * tau * v;
  for (auto& band : b.bands)
    for (auto& z : band) z *= tau * tau;
  const BandedCholesky chol = BandedCholesky::factor(b);

  Trajectory tr;
  tr.final = cfg.u0;
  tr.norms.reserve(cfg.steps);
  tr.energies.reserve(cfg.steps);

  SpinorField t1 = a.make_field();
  SpinorField t2 = a.make_field();
  for (std::size_t s = 0; s < cfg.steps; ++s) {
    // rhs = (I - i tau A)^2 u = u - 2 i tau A u - tau^2 A^2 u
    a.mat.apply(tr.final.values.data(), t1.values.data());
    a.mat.apply(t1.values.data(), t2.values.data());
    axpy(cplx(0.0, -2.0 * tau), t1, tr.final);
    axpy(cplx(-tau * tau, 0.0), t2, tr.final);
    chol.solve_inplace(tr.final.values.data());
    tr.norms.push_back(norm(tr.final));
    a.mat.apply(tr.final.values.data(), t1.values.data());
    tr.energies.push_back(dot(tr.final, t1).real());
  }
  return tr;
}

namespace {

std::vector<EigenPair> restricted_pairs(const HermitianOperator& op,
                                        EvolutionOperator kind,
                                        const SrsOptions& opts) {
  if (kind == EvolutionOperator::point_restricted) {
    const auto hint = op.gap_hint.value_or(std::make_pair(0.0, 2.0));
    InteriorResult r =
        interior_eigs(op, hint.first + opts.delta_edge,
                      hint.second - opts.delta_edge, op.dim(), opts.eig_tol);
    return std::move(r.pairs);
  }
  SpectralDecomposition dec = decompose(op, DecomposeMode::dense, opts.delta_edge);
  std::vector<EigenPair> pairs;
  for (std::size_t i : dec.indices(Band::above)) {
    EigenPair p;
    p.value = dec.eigenvalues[i];
    p.vector = dec.vectors[i];
    pairs.push_back(std::move(p));
  }
  return pairs;
}

// Evolve within span(pairs): diagonal Cayley phases on the coefficients,
// re-embedded into the full space.
SpinorField evolve_in_span(const std::vector<EigenPair>& pairs,
                           const SpinorField& u0, double dt,
                           std::size_t steps) {
  SpinorField out = zero_like(u0);
  const double tau = 0.5 * dt;
  for (const auto& p : pairs) {
    const cplx c0 = dot(p.vector, u0);
    const cplx step = (cplx(1.0, 0.0) - cplx(0.0, tau * p.value)) /
                      (cplx(1.0, 0.0) + cplx(0.0, tau * p.value));
    cplx phase(1.0, 0.0);
    for (std::size_t s = 0; s < steps; ++s) phase *= step;
    axpy(c0 * phase, p.vector, out);
  }
  return out;
}

} // namespace

DynamicsResult dynamics_homogenization(const Grid1D& grid,
                                       const PotentialSpec& spec,
                                       const std::vector<int>& h_list,
                                       const SpinorField& u0, double dt,
                                       double T, EvolutionOperator op_kind,
                                       const SrsOptions& opts) {
  if (!(dt > 0.0)) throw config_error("evolution.dt must be positive");
  if (T < 0.0) throw config_error("evolution.T must be nonnegative");
  const auto steps = static_cast<std::size_t>(std::llround(T / dt));

  DynamicsResult res;
  res.h_list = h_list;

  const HermitianOperator hom = assemble_homogenized(grid, spec, opts.shifted);

  // Each operator evolves its own projection of the same u0 (full kind: u0
  // itself); the deviation compares the full-space trajectories at T.
  SpinorField ref;
  if (op_kind == EvolutionOperator::full) {
    EvolutionConfig cfg{dt, steps, u0};
    ref = steps == 0 ? u0 : propagate(hom, cfg).final;
  } else {
    const std::vector<EigenPair> hom_pairs = restricted_pairs(hom, op_kind, opts);
    SpinorField pu = projected(hom_pairs, u0);
    if (norm(pu) < 1e-8 * norm(u0))
      throw config_error(
          "dynamics_homogenization: subspace projection annihilates u0");
    ref = evolve_in_span(hom_pairs, pu, dt, steps);
  }

  for (int h : h_list) {
    PotentialSpec ps = spec;
    ps.h = h;
    const HermitianOperator ah = assemble_dirac_1d(grid, ps, opts.shifted);
    SpinorField uh;
    if (op_kind == EvolutionOperator::full) {
      EvolutionConfig cfg{dt, steps, u0};
      uh = steps == 0 ? u0 : propagate(ah, cfg).final;
    } else {
      const std::vector<EigenPair> pairs = restricted_pairs(ah, op_kind, opts);
      SpinorField pu = projected(pairs, u0);
      if (norm(pu) < 1e-8 * norm(u0))
        throw config_error(
            "dynamics_homogenization: subspace projection annihilates u0");
      uh = evolve_in_span(pairs, pu, dt, steps);
    }
    res.deviation.push_back(dist(uh, ref));
  }
  res.trend = assess_trend(res.deviation, norm(u0), opts.trend);
  return res;
}

} // namespace gapspec
