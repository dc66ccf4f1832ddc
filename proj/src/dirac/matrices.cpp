#include "gapspec/dirac/matrices.hpp"

namespace gapspec {

namespace {
constexpr cplx kI(0.0, 1.0);
}

DiracMatrices dirac_matrices() {
  DiracMatrices d{};
  d.sigma[0] = Mat2{{{cplx(0), cplx(1)}, {cplx(1), cplx(0)}}};
  d.sigma[1] = Mat2{{{cplx(0), -kI}, {kI, cplx(0)}}};
  d.sigma[2] = Mat2{{{cplx(1), cplx(0)}, {cplx(0), cplx(-1)}}};

  for (int i = 0; i < 3; ++i) {
    Mat4 a{};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        a[r][c + 2] = d.sigma[i][r][c];
        a[r + 2][c] = d.sigma[i][r][c];
      }
    d.alpha[i] = a;
  }

  Mat4 b{};
  b[0][0] = 1.0;
  b[1][1] = 1.0;
  b[2][2] = -1.0;
  b[3][3] = -1.0;
  d.beta = b;
  return d;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

Mat4 add(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

Mat4 anticommutator(const Mat4& a, const Mat4& b) {
  return add(mul(a, b), mul(b, a));
}

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 2; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

bool equal(const Mat4& a, const Mat4& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

bool equal(const Mat2& a, const Mat2& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

bool is_hermitian(const Mat4& a) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (a[i][j] != std::conj(a[j][i])) return false;
  return true;
}

Mat4 identity4(double s) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i) r[i][i] = s;
  return r;
}

Mat2 identity2(double s) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i) r[i][i] = s;
  return r;
}

Mat2 scaled(const Mat2& a, cplx s) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = s * a[i][j];
  return r;
}

} // namespace gapspec
