#include "gapspec/core/banded.hpp"

#include <algorithm>
#include <cmath>

#include "gapspec/core/errors.hpp"
#include "gapspec/kernels/kernels.hpp"

namespace gapspec {

BandedHermitian BandedHermitian::zero(std::size_t dim, int bw) {
  BandedHermitian a;
  a.dim = dim;
  a.bw = bw;
  a.diag.assign(dim, 0.0);
  a.bands.resize(static_cast<std::size_t>(bw));
  for (int d = 1; d <= bw; ++d)
    a.bands[static_cast<std::size_t>(d - 1)].assign(
        dim >= static_cast<std::size_t>(d) ? dim - static_cast<std::size_t>(d) : 0,
        cplx(0.0, 0.0));
  return a;
}

cplx BandedHermitian::at(std::size_t i, std::size_t j) const {
  if (i == j) return cplx(diag[i], 0.0);
  if (i < j) return std::conj(at(j, i));
  const std::size_t d = i - j;
  if (d > static_cast<std::size_t>(bw)) return cplx(0.0, 0.0);
  return bands[d - 1][j];
}

void BandedHermitian::set_lower(std::size_t i, std::size_t j, cplx v) {
  if (i == j) {
    diag[i] = v.real();
    return;
  }
  const std::size_t d = i - j;
  bands[d - 1][j] = v;
}

void BandedHermitian::apply(const cplx* x, cplx* y) const {
  std::fill(y, y + dim, cplx(0.0, 0.0));
  simd::dmul_add(diag.data(), x, y, dim);
  for (int d = 1; d <= bw; ++d) {
    const auto& band = bands[static_cast<std::size_t>(d - 1)];
    const std::size_t m = band.size();
    if (m == 0) continue;
    // A(i+d,i) x_i -> y_{i+d}  and  conj(A(i+d,i)) x_{i+d} -> y_i
    simd::vmul_add(band.data(), x, y + d, m);
    simd::vconj_mul_add(band.data(), x + d, y, m);
  }
}

BandedHermitian BandedHermitian::shifted(double s) const {
  BandedHermitian a = *this;
  for (auto& v : a.diag) v += s;
  return a;
}

double BandedHermitian::max_abs() const {
  double m = 0.0;
  for (double v : diag) m = std::max(m, std::abs(v));
  for (const auto& band : bands)
    for (const cplx& v : band) m = std::max(m, std::abs(v));
  return m;
}

BandedCholesky BandedCholesky::factor(const BandedHermitian& a) {
  BandedCholesky f;
  const std::size_t n = a.dim;
  const int bw = a.bw;
  f.dim_ = n;
  f.bw_ = bw;
  f.ldiag_.assign(n, 0.0);
  f.lbands_.resize(static_cast<std::size_t>(bw));
  for (int d = 1; d <= bw; ++d)
    f.lbands_[static_cast<std::size_t>(d - 1)].assign(
        n >= static_cast<std::size_t>(d) ? n - static_cast<std::size_t>(d) : 0,
        cplx(0.0, 0.0));

  auto lownd = [&](std::size_t i, std::size_t j) -> cplx& {
    return f.lbands_[i - j - 1][j];
  };

  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k0 = j >= static_cast<std::size_t>(bw)
                               ? j - static_cast<std::size_t>(bw)
                               : 0;
    double s = a.diag[j];
    for (std::size_t k = k0; k < j; ++k) s -= std::norm(lownd(j, k));
    if (!(s > 0.0))
      throw contract_error(
          "BandedCholesky: non-positive pivot (indefinite system detected)");
    const double ljj = std::sqrt(s);
    f.ldiag_[j] = ljj;
    const std::size_t imax = std::min(n - 1, j + static_cast<std::size_t>(bw));
    for (std::size_t i = j + 1; i <= imax; ++i) {
      cplx t = a.at(i, j);
      const std::size_t kk0 =
          i >= static_cast<std::size_t>(bw) ? i - static_cast<std::size_t>(bw) : 0;
      for (std::size_t k = std::max(k0, kk0); k < j; ++k)
        t -= lownd(i, k) * std::conj(lownd(j, k));
      lownd(i, j) = t / ljj;
    }
  }
  return f;
}

void BandedCholesky::solve_inplace(cplx* b) const {
  const std::size_t n = dim_;
  const auto bw = static_cast<std::size_t>(bw_);
  // forward L z = b
  for (std::size_t i = 0; i < n; ++i) {
    cplx t = b[i];
    const std::size_t j0 = i >= bw ? i - bw : 0;
    for (std::size_t j = j0; j < i; ++j) t -= lbands_[i - j - 1][j] * b[j];
    b[i] = t / ldiag_[i];
  }
  // backward L^H x = z
  for (std::size_t ii = n; ii-- > 0;) {
    cplx t = b[ii];
    const std::size_t jmax = std::min(n - 1, ii + bw);
    for (std::size_t j = ii + 1; j <= jmax; ++j)
      t -= std::conj(lbands_[j - ii - 1][ii]) * b[j];
    b[ii] = t / ldiag_[ii];
  }
}

BandedLDL BandedLDL::factor(const BandedHermitian& a, double pivot_floor) {
  BandedLDL f;
  const std::size_t n = a.dim;
  const int bw = a.bw;
  f.dim_ = n;
  f.bw_ = bw;
  f.d_.assign(n, 0.0);
  f.lbands_.resize(static_cast<std::size_t>(bw));
  for (int d = 1; d <= bw; ++d)
    f.lbands_[static_cast<std::size_t>(d - 1)].assign(
        n >= static_cast<std::size_t>(d) ? n - static_cast<std::size_t>(d) : 0,
        cplx(0.0, 0.0));

  const double scale = std::max(1.0, a.max_abs());
  const double floor_abs = pivot_floor * scale;

  auto lownd = [&](std::size_t i, std::size_t j) -> cplx& {
    return f.lbands_[i - j - 1][j];
  };

  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k0 = j >= static_cast<std::size_t>(bw)
                               ? j - static_cast<std::size_t>(bw)
                               : 0;
    double s = a.diag[j];
    for (std::size_t k = k0; k < j; ++k) s -= std::norm(lownd(j, k)) * f.d_[k];
    if (std::abs(s) < floor_abs) {
      f.near_singular_ = true;
      s = (s >= 0.0 ? floor_abs : -floor_abs); // keep the sweep going
    }
    f.d_[j] = s;
    const std::size_t imax = std::min(n - 1, j + static_cast<std::size_t>(bw));
    for (std::size_t i = j + 1; i <= imax; ++i) {
      cplx t = a.at(i, j);
      const std::size_t kk0 =
          i >= static_cast<std::size_t>(bw) ? i - static_cast<std::size_t>(bw) : 0;
      for (std::size_t k = std::max(k0, kk0); k < j; ++k)
        t -= lownd(i, k) * std::conj(lownd(j, k)) * f.d_[k];
      lownd(i, j) = t / s;
    }
  }
  return f;
}

std::size_t BandedLDL::negative_count() const {
  std::size_t c = 0;
  for (double v : d_)
    if (v < 0.0) ++c;
  return c;
}

void BandedLDL::solve_inplace(cplx* b) const {
  const std::size_t n = dim_;
  const auto bw = static_cast<std::size_t>(bw_);
  for (std::size_t i = 0; i < n; ++i) {
    cplx t = b[i];
    const std::size_t j0 = i >= bw ? i - bw : 0;
    for (std::size_t j = j0; j < i; ++j) t -= lbands_[i - j - 1][j] * b[j];
    b[i] = t;
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= d_[i];
  for (std::size_t ii = n; ii-- > 0;) {
    cplx t = b[ii];
    const std::size_t jmax = std::min(n - 1, ii + bw);
    for (std::size_t j = ii + 1; j <= jmax; ++j)
      t -= std::conj(lbands_[j - ii - 1][ii]) * b[j];
    b[ii] = t;
  }
}

} // namespace gapspec
