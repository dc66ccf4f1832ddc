#include "gapspec/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace gapspec::simd {

namespace scalar {

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(cplx a, cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double norm2(const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

void vmul_add(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a[i] * x[i];
}

void vconj_mul_add(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += std::conj(a[i]) * x[i];
}

void dmul_add(const double* d, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += d[i] * x[i];
}

} // namespace scalar

#ifdef GAPSPEC_HAVE_AVX2
namespace avx2 {
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);
void scale(cplx a, cplx* x, std::size_t n);
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);
double norm2(const cplx* x, std::size_t n);
void vmul_add(const cplx* a, const cplx* x, cplx* y, std::size_t n);
void vconj_mul_add(const cplx* a, const cplx* x, cplx* y, std::size_t n);
void dmul_add(const double* d, const cplx* x, cplx* y, std::size_t n);
} // namespace avx2
#endif

namespace {

struct Dispatch {
  Level level;
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
  void (*scale)(cplx, cplx*, std::size_t);
  cplx (*dot_conj)(const cplx*, const cplx*, std::size_t);
  double (*norm2)(const cplx*, std::size_t);
  void (*vmul_add)(const cplx*, const cplx*, cplx*, std::size_t);
  void (*vconj_mul_add)(const cplx*, const cplx*, cplx*, std::size_t);
  void (*dmul_add)(const double*, const cplx*, cplx*, std::size_t);
};

constexpr Dispatch kScalar = {Level::scalar,        scalar::axpy,
                              scalar::scale,        scalar::dot_conj,
                              scalar::norm2,        scalar::vmul_add,
                              scalar::vconj_mul_add, scalar::dmul_add};

#ifdef GAPSPEC_HAVE_AVX2
constexpr Dispatch kAvx2 = {Level::avx2,          avx2::axpy,
                            avx2::scale,          avx2::dot_conj,
                            avx2::norm2,          avx2::vmul_add,
                            avx2::vconj_mul_add,  avx2::dmul_add};
#endif

bool cpu_has_avx2() {
#if defined(GAPSPEC_HAVE_AVX2) && defined(__x86_64__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Dispatch pick_default() {
  const char* env = std::getenv("GAPSPEC_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return kScalar;
#ifdef GAPSPEC_HAVE_AVX2
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return kAvx2;
#endif
    throw std::runtime_error(std::string("GAPSPEC_SIMD: unsupported level '") +
                             env + "'");
  }
#ifdef GAPSPEC_HAVE_AVX2
  if (cpu_has_avx2()) return kAvx2;
#endif
  return kScalar;
}

Dispatch g_dispatch = pick_default();

} // namespace

Level active_level() { return g_dispatch.level; }

const char* level_name(Level lv) {
  return lv == Level::avx2 ? "avx2" : "scalar";
}

void force_level(Level lv) {
  if (lv == Level::scalar) {
    g_dispatch = kScalar;
    return;
  }
#ifdef GAPSPEC_HAVE_AVX2
  if (lv == Level::avx2 && cpu_has_avx2()) {
    g_dispatch = kAvx2;
    return;
  }
#endif
  throw std::runtime_error("force_level: level not supported on this machine");
}

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  g_dispatch.axpy(a, x, y, n);
}
void scale(cplx a, cplx* x, std::size_t n) { g_dispatch.scale(a, x, n); }
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  return g_dispatch.dot_conj(x, y, n);
}
double norm2(const cplx* x, std::size_t n) { return g_dispatch.norm2(x, n); }
void vmul_add(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  g_dispatch.vmul_add(a, x, y, n);
}
void vconj_mul_add(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  g_dispatch.vconj_mul_add(a, x, y, n);
}
void dmul_add(const double* d, const cplx* x, cplx* y, std::size_t n) {
  g_dispatch.dmul_add(d, x, y, n);
}

} // namespace gapspec::simd
