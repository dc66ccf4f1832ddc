#pragma once

#include <array>
#include <complex>

namespace gapspec {

using cplx = std::complex<double>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;
using Mat4 = std::array<std::array<cplx, 4>, 4>;

// Natural units: these never change.
struct PhysicalConstants {
  static constexpr double hbar = 1.0;
  static constexpr double c = 1.0;
  static constexpr double m = 1.0;
};

// The 4x4 Dirac matrices in the standard (Dirac) representation,
//   alpha_i = [[0, sigma_i], [sigma_i, 0]],  beta = diag(I, -I),
// together with the three 2x2 Pauli matrices. All entries are exact
// (0, +/-1, +/-i), so the algebra identities hold in exact arithmetic.
struct DiracMatrices {
  std::array<Mat4, 3> alpha;
  Mat4 beta;
  std::array<Mat2, 3> sigma;
};

DiracMatrices dirac_matrices();

// Exact (integer/i) matrix helpers for the algebra checks.
Mat4 mul(const Mat4& a, const Mat4& b);
Mat4 add(const Mat4& a, const Mat4& b);
Mat4 anticommutator(const Mat4& a, const Mat4& b);
Mat2 mul(const Mat2& a, const Mat2& b);
bool equal(const Mat4& a, const Mat4& b);
bool equal(const Mat2& a, const Mat2& b);
bool is_hermitian(const Mat4& a);
Mat4 identity4(double s = 1.0);
Mat2 identity2(double s = 1.0);
Mat2 scaled(const Mat2& a, cplx s);

} // namespace gapspec
