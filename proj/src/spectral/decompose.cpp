#include "gapspec/spectral/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gapspec/core/errors.hpp"

namespace gapspec {

namespace {

Band classify(double lambda, double lo, double hi, double delta) {
  if (lambda <= lo + delta) return Band::below;
  if (lambda >= hi - delta) return Band::above;
  return Band::gap;
}

} // namespace

std::size_t SpectralDecomposition::count(Band b) const {
  std::size_t c = 0;
  for (Band x : classification)
    if (x == b) ++c;
  return c;
}

std::vector<std::size_t> SpectralDecomposition::indices(Band b) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < classification.size(); ++i)
    if (classification[i] == b) idx.push_back(i);
  return idx;
}

SpectralDecomposition decompose(const HermitianOperator& a, DecomposeMode mode,
                                double delta_edge, double edge_band, double tol) {
  SpectralDecomposition dec;
  dec.delta_edge = delta_edge;
  const auto hint = a.gap_hint.value_or(std::make_pair(0.0, 2.0));
  dec.gap_lo = hint.first;
  dec.gap_hi = hint.second;

  if (mode == DecomposeMode::dense) {
    if (a.dim() > kDenseDimLimit)
      throw config_error("decompose: dimension too large for dense mode");
    DenseEigResult full = dense_eig(a);
    dec.complete = true;
    dec.eigenvalues = std::move(full.values);
    dec.vectors.reserve(dec.eigenvalues.size());
    for (auto& v : full.vectors) {
      SpinorField f = a.make_field();
      f.values = std::move(v);
      dec.vectors.push_back(std::move(f));
    }
    for (double lam : dec.eigenvalues) {
      dec.classification.push_back(classify(lam, dec.gap_lo, dec.gap_hi, delta_edge));
    }
    // residual of the worst pair (sampled; full check would double the cost)
    double worst = 0.0;
    const std::size_t stride = std::max<std::size_t>(1, dec.eigenvalues.size() / 16);
    for (std::size_t i = 0; i < dec.eigenvalues.size(); i += stride) {
      SpinorField r = apply(a, dec.vectors[i]);
      axpy(cplx(-dec.eigenvalues[i], 0.0), dec.vectors[i], r);
      worst = std::max(worst, norm(r));
    }
    dec.max_residual = worst;
    return dec;
  }

  // windowed: gap window plus edge bands around the gap boundaries
  const double wlo = dec.gap_lo - edge_band;
  const double whi = dec.gap_hi + edge_band;
  if (!(wlo < whi)) throw config_error("decompose: empty window");
  InteriorResult in = interior_eigs(a, wlo, whi, a.dim(), tol);
  dec.complete = false;
  for (auto& p : in.pairs) {
    dec.eigenvalues.push_back(p.value);
    dec.vectors.push_back(std::move(p.vector));
    dec.classification.push_back(
        classify(dec.eigenvalues.back(), dec.gap_lo, dec.gap_hi, delta_edge));
    dec.max_residual = std::max(dec.max_residual, p.residual);
  }
  return dec;
}

double reconstruction_error(const HermitianOperator& a,
                            const SpectralDecomposition& dec, int iters) {
  if (!dec.complete)
    throw contract_error("reconstruction_error: needs a complete decomposition");
  std::mt19937_64 rng(42);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto rand_field = [&]() {
    SpinorField v = a.make_field();
    for (auto& z : v.values) z = cplx(gauss(rng), gauss(rng));
    normalize(v);
    return v;
  };

  auto defect_apply = [&](const SpinorField& u) {
    SpinorField r = apply(a, u);
    for (std::size_t i = 0; i < dec.vectors.size(); ++i) {
      const cplx c = dot(dec.vectors[i], u);
      axpy(-dec.eigenvalues[i] * c, dec.vectors[i], r);
    }
    return r;
  };

  auto power_norm = [&](auto&& op) {
    SpinorField v = rand_field();
    double est = 0.0;
    for (int it = 0; it < iters; ++it) {
      SpinorField w = op(v);
      est = norm(w);
      if (est == 0.0) return 0.0;
      scale_field(cplx(1.0 / est, 0.0), w);
      v = std::move(w);
    }
    return est;
  };

  const double na = power_norm([&](const SpinorField& u) { return apply(a, u); });
  const double nd = power_norm(defect_apply);
  return na > 0.0 ? nd / na : nd;
}

} // namespace gapspec
