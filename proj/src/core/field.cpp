#include "gapspec/core/field.hpp"

#include <cmath>

#include "gapspec/core/errors.hpp"
#include "gapspec/kernels/kernels.hpp"

namespace gapspec {

SpinorField zero_like(const SpinorField& u) {
  SpinorField z = u;
  z.values.assign(u.values.size(), cplx(0.0, 0.0));
  return z;
}

double norm(const SpinorField& u) {
  return std::sqrt(u.weight * simd::norm2(u.values.data(), u.values.size()));
}

cplx dot(const SpinorField& u, const SpinorField& v) {
  if (u.values.size() != v.values.size())
    throw contract_error("dot: field dimensions differ");
  return u.weight * simd::dot_conj(u.values.data(), v.values.data(), u.values.size());
}

void axpy(cplx a, const SpinorField& x, SpinorField& y) {
  if (x.values.size() != y.values.size())
    throw contract_error("axpy: field dimensions differ");
  simd::axpy(a, x.values.data(), y.values.data(), x.values.size());
}

void scale_field(cplx a, SpinorField& u) {
  simd::scale(a, u.values.data(), u.values.size());
}

void normalize(SpinorField& u) {
  const double nu = norm(u);
  if (nu == 0.0) throw solver_error("normalize: zero field");
  scale_field(cplx(1.0 / nu, 0.0), u);
}

double dist(const SpinorField& u, const SpinorField& v) {
  if (u.values.size() != v.values.size())
    throw contract_error("dist: field dimensions differ");
  double s = 0.0;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    const cplx d = u.values[i] - v.values[i];
    s += d.real() * d.real() + d.imag() * d.imag();
  }
  return std::sqrt(u.weight * s);
}

void fix_phase(SpinorField& u) {
  std::size_t imax = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    const double m = std::norm(u.values[i]);
    if (m > best) {
      best = m;
      imax = i;
    }
  }
  if (best == 0.0) return;
  const cplx z = u.values[imax];
  const double a = std::abs(z);
  if (z.imag() == 0.0 && z.real() > 0.0) return; // already fixed
  scale_field(std::conj(z) / a, u);
  u.values[imax] = cplx(a, 0.0); // pin exactly, so re-fixing is a no-op
}

} // namespace gapspec
