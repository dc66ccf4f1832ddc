#pragma once

#include <complex>
#include <cstddef>

// Complex vector kernels used by every hot loop (banded matvec, factorization
// sweeps, Lanczos-style recurrences, propagator steps). Each kernel has a
// scalar reference implementation and, on x86-64 with AVX2+FMA, a vectorized
// variant. The variant is selected once at startup from cpuid; the
// GAPSPEC_SIMD environment variable ("scalar" or "avx2") overrides it, which
// the equivalence tests use to pin both paths.

namespace gapspec::simd {

using cplx = std::complex<double>;

enum class Level { scalar = 0, avx2 = 1 };

Level active_level();
const char* level_name(Level lv);

// Test hook. Throws std::runtime_error if the requested level is not
// supported on this machine.
void force_level(Level lv);

// y[i] += a * x[i]
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);

// x[i] *= a
void scale(cplx a, cplx* x, std::size_t n);

// sum_i conj(x[i]) * y[i]
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);

// sum_i |x[i]|^2
double norm2(const cplx* x, std::size_t n);

// y[i] += a[i] * x[i]
void vmul_add(const cplx* a, const cplx* x, cplx* y, std::size_t n);

// y[i] += conj(a[i]) * x[i]
void vconj_mul_add(const cplx* a, const cplx* x, cplx* y, std::size_t n);

// y[i] += d[i] * x[i] with real d
void dmul_add(const double* d, const cplx* x, cplx* y, std::size_t n);

} // namespace gapspec::simd
