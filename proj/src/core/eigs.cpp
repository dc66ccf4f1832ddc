#include "gapspec/core/eigs.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "gapspec/core/errors.hpp"

namespace gapspec {

namespace {

double spectral_scale(const HermitianOperator& a) {
  return std::max(1.0, a.mat.max_abs());
}

// Inertia of A - tI with deterministic nudging when the shift lands on an
// eigenvalue (near-singular pivot).
std::size_t inertia_below(const HermitianOperator& a, double t) {
  const double scale = spectral_scale(a);
  double shift = t;
  for (int attempt = 0; attempt < 6; ++attempt) {
    BandedLDL f = BandedLDL::factor(a.mat.shifted(-shift));
    if (!f.near_singular()) return f.negative_count();
    shift = t + scale * 1e-11 * static_cast<double>(attempt + 1);
  }
  // Accept the perturbed-pivot count; the ambiguity is below 1e-10 * scale.
  return BandedLDL::factor(a.mat.shifted(-shift)).negative_count();
}

double rayleigh(const HermitianOperator& a, const SpinorField& v) {
  SpinorField av = apply(a, v);
  return dot(v, av).real() / dot(v, v).real();
}

double residual_norm(const HermitianOperator& a, const SpinorField& v,
                     double lambda) {
  SpinorField r = apply(a, v);
  axpy(cplx(-lambda, 0.0), v, r);
  return norm(r) / norm(v);
}

SpinorField random_field(const HermitianOperator& a, std::mt19937_64& rng) {
  SpinorField v = a.make_field();
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& z : v.values) z = cplx(gauss(rng), gauss(rng));
  normalize(v);
  return v;
}

} // namespace

// ---- small dense Hermitian eigensolver (cyclic complex Jacobi) ----------
//
// Used for the Rayleigh-Ritz step on clustered eigenvalues and Gram-matrix
// norms; kept independent of the dense oracle path.
SmallEigResult small_hermitian_eig(std::vector<cplx> h, std::size_t m) {
  SmallEigResult out;
  std::vector<cplx> v(m * m, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < m; ++i) v[i * m + i] = 1.0;
  auto H = [&](std::size_t i, std::size_t j) -> cplx& { return h[i * m + j]; };

  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) scale = std::max(scale, std::abs(h[i * m + j]));
  if (scale == 0.0) scale = 1.0;

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off = std::max(off, std::abs(H(p, q)));
    if (off < 1e-15 * scale) break;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double g = std::abs(H(p, q));
        if (g < 1e-18 * scale) continue;
        const cplx u = H(p, q) / g; // phase
        const double tau = (H(q, q).real() - H(p, p).real()) / (2.0 * g);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // W = [[c, s],[-s conj(u), c conj(u)]] acting on columns p,q
        for (std::size_t k = 0; k < m; ++k) {
          const cplx akp = H(k, p), akq = H(k, q);
          H(k, p) = c * akp - s * std::conj(u) * akq;
          H(k, q) = s * akp + c * std::conj(u) * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const cplx apk = H(p, k), aqk = H(q, k);
          H(p, k) = c * apk - s * u * aqk;
          H(q, k) = s * apk + c * u * aqk;
        }
        H(p, q) = cplx(0.0, 0.0);
        H(q, p) = cplx(0.0, 0.0);
        for (std::size_t k = 0; k < m; ++k) {
          const cplx vkp = v[k * m + p], vkq = v[k * m + q];
          v[k * m + p] = c * vkp - s * std::conj(u) * vkq;
          v[k * m + q] = s * vkp + c * std::conj(u) * vkq;
        }
      }
    }
  }

  // sort ascending
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return H(i, i).real() < H(j, j).real();
  });
  out.values.resize(m);
  out.vectors.assign(m * m, cplx(0.0, 0.0));
  for (std::size_t c = 0; c < m; ++c) {
    out.values[c] = H(idx[c], idx[c]).real();
    for (std::size_t r = 0; r < m; ++r) out.vectors[c * m + r] = v[r * m + idx[c]];
  }
  return out;
}

std::size_t eig_count_below(const HermitianOperator& a, double t) {
  return inertia_below(a, t);
}

std::size_t eig_count_in(const HermitianOperator& a, double lo, double hi) {
  if (!(lo < hi)) throw config_error("eig_count_in: empty window");
  const std::size_t nlo = inertia_below(a, lo);
  const std::size_t nhi = inertia_below(a, hi);
  return nhi >= nlo ? nhi - nlo : 0;
}

double min_abs_eigenvalue(const HermitianOperator& a, double tol) {
  // Gershgorin-type upper bound on |spectrum|
  double hi = a.mat.max_abs() * static_cast<double>(2 * a.mat.bw + 1) + 1.0;
  double lo = 0.0;
  auto count_sym = [&](double t) {
    return inertia_below(a, t) - inertia_below(a, -t);
  };
  if (count_sym(hi) == 0)
    throw solver_error("min_abs_eigenvalue: no spectrum below Gershgorin bound");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (count_sym(mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

struct Slice {
  double lo, hi;
  std::size_t count;
};

// Inverse iteration with Rayleigh-quotient acceleration on a slice certified
// to contain exactly one eigenvalue. Falls back to deeper bisection when the
// iteration is captured by a neighbor just outside the slice.
EigenPair extract_single(const HermitianOperator& a, double lo, double hi,
                         double tol, std::mt19937_64& rng, int depth) {
  if (depth > 64)
    throw solver_error("interior_eigs: failed to isolate eigenvalue in (" +
                       std::to_string(lo) + ", " + std::to_string(hi) + ")");
  const double scale = spectral_scale(a);
  const double width = hi - lo;
  const double slack = 1e-6 * width + 1e-13 * scale;
  double sigma = 0.5 * (lo + hi);
  SpinorField v = random_field(a, rng);

  double rho = sigma;
  bool converged = false;
  for (int it = 0; it < 12 && !converged; ++it) {
    BandedLDL f = BandedLDL::factor(a.mat.shifted(-sigma));
    if (f.near_singular()) {
      // sigma is essentially the eigenvalue; a nudged factorization still
      // yields a fine inverse-iteration step
      f = BandedLDL::factor(a.mat.shifted(-(sigma + 1e-11 * scale)));
    }
    f.solve_inplace(v.values.data());
    normalize(v);
    rho = rayleigh(a, v);
    if (residual_norm(a, v, rho) <= tol * std::max(1.0, std::abs(rho))) {
      converged = true;
      break;
    }
    if (it >= 1) sigma = std::clamp(rho, lo - width, hi + width);
  }

  if (converged && rho > lo - slack && rho < hi + slack) {
    fix_phase(v);
    EigenPair p;
    p.value = rho;
    p.vector = std::move(v);
    p.residual = residual_norm(a, p.vector, rho);
    return p;
  }

  // Captured by an outside eigenvalue or stalled: shrink the slice around the
  // certified eigenvalue and retry.
  const double mid = 0.5 * (lo + hi);
  const std::size_t nlo = inertia_below(a, lo);
  const std::size_t nmid = inertia_below(a, mid);
  if (nmid - nlo >= 1) return extract_single(a, lo, mid, tol, rng, depth + 1);
  return extract_single(a, mid, hi, tol, rng, depth + 1);
}

// Block inverse iteration + Rayleigh-Ritz for a cluster narrower than the
// slicing resolution.
std::vector<EigenPair> extract_cluster(const HermitianOperator& a, double lo,
                                       double hi, std::size_t count, double tol,
                                       std::mt19937_64& rng) {
  const double scale = spectral_scale(a);
  double sigma = 0.5 * (lo + hi);
  BandedLDL f = BandedLDL::factor(a.mat.shifted(-sigma));
  if (f.near_singular())
    f = BandedLDL::factor(a.mat.shifted(-(sigma + 1e-11 * scale)));

  std::vector<SpinorField> basis;
  basis.reserve(count);
  for (std::size_t i = 0; i < count; ++i) basis.push_back(random_field(a, rng));

  for (int sweep = 0; sweep < 6; ++sweep) {
    for (auto& x : basis) {
      f.solve_inplace(x.values.data());
    }
    // modified Gram-Schmidt, twice
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
          axpy(-dot(basis[j], basis[i]), basis[j], basis[i]);
        normalize(basis[i]);
      }
    }
  }

  // Rayleigh-Ritz in the block
  const std::size_t m = basis.size();
  std::vector<cplx> h(m * m);
  std::vector<SpinorField> abasis;
  abasis.reserve(m);
  for (const auto& x : basis) abasis.push_back(apply(a, x));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h[i * m + j] = dot(basis[i], abasis[j]);
  SmallEigResult se = small_hermitian_eig(std::move(h), m);

  std::vector<EigenPair> out;
  out.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    EigenPair p;
    p.value = se.values[c];
    p.vector = zero_like(basis[0]);
    for (std::size_t r = 0; r < m; ++r)
      axpy(se.vectors[c * m + r], basis[r], p.vector);
    normalize(p.vector);
    fix_phase(p.vector);
    p.residual = residual_norm(a, p.vector, p.value);
    (void)tol;
    out.push_back(std::move(p));
  }
  return out;
}

} // namespace

InteriorResult interior_eigs(const HermitianOperator& a, double lo, double hi,
                             std::size_t k_max, double tol, std::uint64_t seed) {
  if (!(lo < hi)) throw config_error("interior_eigs: empty window");
  InteriorResult res;

  const std::size_t nlo = inertia_below(a, lo);
  const std::size_t nhi = inertia_below(a, hi);
  res.certified_count = nhi >= nlo ? nhi - nlo : 0;

  // Warn when eigenvalue clusters hug the window from outside; in that
  // situation nearby discretized-continuum levels are easily mistaken for
  // gap states under small parameter changes.
  const double collar = 0.002 * (hi - lo);
  if (inertia_below(a, lo) - inertia_below(a, lo - collar) > 2 ||
      inertia_below(a, hi + collar) - inertia_below(a, hi) > 2)
    res.edge_warning = true;
  if (a.gap_hint &&
      (lo < a.gap_hint->first - 1e-12 || hi > a.gap_hint->second + 1e-12))
    res.edge_warning = true;

  if (res.certified_count == 0) {
    res.complete = true;
    return res;
  }

  const double cluster_eps = std::max(1e-12, 1e-12 * spectral_scale(a));
  std::vector<Slice> work{{lo, hi, res.certified_count}};
  std::vector<Slice> ready;
  while (!work.empty()) {
    Slice s = work.back();
    work.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1 || s.hi - s.lo <= cluster_eps) {
      ready.push_back(s);
      continue;
    }
    const double mid = 0.5 * (s.lo + s.hi);
    const std::size_t nmid = inertia_below(a, mid);
    const std::size_t nl = inertia_below(a, s.lo);
    const std::size_t cl = nmid >= nl ? nmid - nl : 0;
    work.push_back({s.lo, mid, cl});
    work.push_back({mid, s.hi, s.count - cl});
  }
  std::sort(ready.begin(), ready.end(),
            [](const Slice& x, const Slice& y) { return x.lo < y.lo; });

  std::mt19937_64 rng(seed);
  for (const Slice& s : ready) {
    if (s.count == 1) {
      res.pairs.push_back(extract_single(a, s.lo, s.hi, tol, rng, 0));
    } else {
      auto cluster = extract_cluster(a, s.lo, s.hi, s.count, tol, rng);
      for (auto& p : cluster) res.pairs.push_back(std::move(p));
    }
  }
  std::sort(res.pairs.begin(), res.pairs.end(),
            [](const EigenPair& x, const EigenPair& y) { return x.value < y.value; });

  res.complete = res.pairs.size() == res.certified_count;
  if (res.pairs.size() > k_max) {
    res.pairs.resize(k_max);
    res.complete = false;
  }
  return res;
}

DenseEigResult dense_eig(const HermitianOperator& a) {
  const std::size_t n = a.dim();
  if (n > kDenseDimLimit)
    throw config_error("dense_eig: dimension " + std::to_string(n) +
                       " exceeds dense limit " + std::to_string(kDenseDimLimit));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = a.mat.diag[i];
  for (int d = 1; d <= a.mat.bw; ++d) {
    const auto& band = a.mat.bands[static_cast<std::size_t>(d - 1)];
    for (std::size_t j = 0; j < band.size(); ++j) {
      m(static_cast<Eigen::Index>(j + d), static_cast<Eigen::Index>(j)) = band[j];
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j + d)) =
          std::conj(band[j]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success)
    throw solver_error("dense_eig: Eigen SelfAdjointEigenSolver failed");

  DenseEigResult out;
  out.values.resize(n);
  out.vectors.resize(n);
  const double inv_sw = 1.0 / std::sqrt(a.weight);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = es.eigenvalues()(static_cast<Eigen::Index>(c));
    auto& v = out.vectors[c];
    v.resize(n);
    for (std::size_t r = 0; r < n; ++r)
      v[r] = es.eigenvectors()(static_cast<Eigen::Index>(r),
                               static_cast<Eigen::Index>(c)) *
             inv_sw;
    // phase fix
    std::size_t imax = 0;
    double best = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double mag = std::norm(v[r]);
      if (mag > best) {
        best = mag;
        imax = r;
      }
    }
    if (best > 0.0) {
      const cplx z = v[imax] / std::abs(v[imax]);
      for (auto& e : v) e *= std::conj(z);
      v[imax] = cplx(std::abs(v[imax]), 0.0);
    }
  }
  return out;
}

} // namespace gapspec
