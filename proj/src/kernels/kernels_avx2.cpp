// AVX2+FMA variants of the complex kernels. Two complex<double> per __m256d,
// interleaved [re0 im0 re1 im1]. Complex products use the usual
// movedup/permute + fmaddsub decomposition:
//   a*x       : fmaddsub(x, dup_re(a), swap(x)*dup_im(a))
//   conj(a)*x : fmsubadd(x, dup_re(a), swap(x)*dup_im(a))
// This file is compiled with -mavx2 -mfma; the dispatcher guarantees these
// entry points only run on hardware that reports both.

#ifdef GAPSPEC_HAVE_AVX2

#include <immintrin.h>

#include "gapspec/kernels/kernels.hpp"

namespace gapspec::simd::avx2 {

namespace {

inline const double* dptr(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* dptr(cplx* p) { return reinterpret_cast<double*>(p); }

// [ar,ai,...] -> product helper: z * (scalar a) for a full register
inline __m256d cmul(__m256d x, __m256d a_re, __m256d a_im) {
  __m256d xs = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(x, a_re, _mm256_mul_pd(xs, a_im));
}

} // namespace

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(dptr(x + i));
    __m256d vy = _mm256_loadu_pd(dptr(y + i));
    vy = _mm256_add_pd(vy, cmul(vx, ar, ai));
    _mm256_storeu_pd(dptr(y + i), vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale(cplx a, cplx* x, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(dptr(x + i));
    _mm256_storeu_pd(dptr(x + i), cmul(vx, ar, ai));
  }
  for (; i < n; ++i) x[i] *= a;
}

cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vx0 = _mm256_loadu_pd(dptr(x + i));
    __m256d vy0 = _mm256_loadu_pd(dptr(y + i));
    __m256d vx1 = _mm256_loadu_pd(dptr(x + i + 2));
    __m256d vy1 = _mm256_loadu_pd(dptr(y + i + 2));
    __m256d xr0 = _mm256_movedup_pd(vx0);
    __m256d xi0 = _mm256_permute_pd(vx0, 0xF);
    __m256d xr1 = _mm256_movedup_pd(vx1);
    __m256d xi1 = _mm256_permute_pd(vx1, 0xF);
    __m256d ys0 = _mm256_permute_pd(vy0, 0x5);
    __m256d ys1 = _mm256_permute_pd(vy1, 0x5);
    acc0 = _mm256_add_pd(
        acc0, _mm256_fmsubadd_pd(vy0, xr0, _mm256_mul_pd(ys0, xi0)));
    acc1 = _mm256_add_pd(
        acc1, _mm256_fmsubadd_pd(vy1, xr1, _mm256_mul_pd(ys1, xi1)));
  }
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(dptr(x + i));
    __m256d vy = _mm256_loadu_pd(dptr(y + i));
    __m256d xr = _mm256_movedup_pd(vx);
    __m256d xi = _mm256_permute_pd(vx, 0xF);
    __m256d ys = _mm256_permute_pd(vy, 0x5);
    acc0 =
        _mm256_add_pd(acc0, _mm256_fmsubadd_pd(vy, xr, _mm256_mul_pd(ys, xi)));
  }
  __m256d acc = _mm256_add_pd(acc0, acc1);
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d s = _mm_add_pd(lo, hi); // [re, im]
  double out[2];
  _mm_storeu_pd(out, s);
  cplx r(out[0], out[1]);
  for (; i < n; ++i) r += std::conj(x[i]) * y[i];
  return r;
}

double norm2(const cplx* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v0 = _mm256_loadu_pd(dptr(x + i));
    __m256d v1 = _mm256_loadu_pd(dptr(x + i + 2));
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(dptr(x + i));
    acc0 = _mm256_fmadd_pd(v, v, acc0);
  }
  __m256d acc = _mm256_add_pd(acc0, acc1);
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d s = _mm_add_pd(lo, hi);
  s = _mm_hadd_pd(s, s);
  double r = _mm_cvtsd_f64(s);
  for (; i < n; ++i)
    r += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return r;
}

void vmul_add(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(dptr(a + i));
    __m256d vx = _mm256_loadu_pd(dptr(x + i));
    __m256d vy = _mm256_loadu_pd(dptr(y + i));
    __m256d ar = _mm256_movedup_pd(va);
    __m256d ai = _mm256_permute_pd(va, 0xF);
    __m256d xs = _mm256_permute_pd(vx, 0x5);
    vy = _mm256_add_pd(vy,
                       _mm256_fmaddsub_pd(vx, ar, _mm256_mul_pd(xs, ai)));
    _mm256_storeu_pd(dptr(y + i), vy);
  }
  for (; i < n; ++i) y[i] += a[i] * x[i];
}

void vconj_mul_add(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(dptr(a + i));
    __m256d vx = _mm256_loadu_pd(dptr(x + i));
    __m256d vy = _mm256_loadu_pd(dptr(y + i));
    __m256d ar = _mm256_movedup_pd(va);
    __m256d ai = _mm256_permute_pd(va, 0xF);
    __m256d xs = _mm256_permute_pd(vx, 0x5);
    vy = _mm256_add_pd(vy,
                       _mm256_fmsubadd_pd(vx, ar, _mm256_mul_pd(xs, ai)));
    _mm256_storeu_pd(dptr(y + i), vy);
  }
  for (; i < n; ++i) y[i] += std::conj(a[i]) * x[i];
}

void dmul_add(const double* d, const cplx* x, cplx* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m128d t = _mm_loadu_pd(d + i);
    __m256d dd =
        _mm256_permute4x64_pd(_mm256_castpd128_pd256(t), 0x50); // [d0 d0 d1 d1]
    __m256d vx = _mm256_loadu_pd(dptr(x + i));
    __m256d vy = _mm256_loadu_pd(dptr(y + i));
    _mm256_storeu_pd(dptr(y + i), _mm256_fmadd_pd(dd, vx, vy));
  }
  for (; i < n; ++i) y[i] += d[i] * x[i];
}

} // namespace gapspec::simd::avx2

#endif // GAPSPEC_HAVE_AVX2
