#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gapspec {

using cplx = std::complex<double>;

// Hermitian banded matrix, lower triangle stored:
//   diag[i]        = A(i,i)   (real by hermiticity)
//   bands[d-1][i]  = A(i+d,i) for d = 1..bw
// The upper triangle follows from A = A*, so the storage cannot even express
// a non-Hermitian matrix.
struct BandedHermitian {
  std::size_t dim = 0;
  int bw = 0;
  std::vector<double> diag;
  std::vector<std::vector<cplx>> bands;

  static BandedHermitian zero(std::size_t dim, int bw);

  cplx at(std::size_t i, std::size_t j) const; // general accessor (slow path)
  void set_lower(std::size_t i, std::size_t j, cplx v); // requires i >= j

  // y = A x
  void apply(const cplx* x, cplx* y) const;

  // A + s I
  BandedHermitian shifted(double s) const;

  // max |entry| (scale estimate for pivot thresholds)
  double max_abs() const;
};

// Cholesky factorization A = L L^H for positive definite A.
// Throws contract_error when a pivot is not strictly positive
// (indefinite system detected).
class BandedCholesky {
 public:
  static BandedCholesky factor(const BandedHermitian& a);

  void solve_inplace(cplx* b) const; // b <- A^{-1} b
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_ = 0;
  int bw_ = 0;
  std::vector<double> ldiag_;
  std::vector<std::vector<cplx>> lbands_;
};

// L D L^H factorization without pivoting, D real. Valid for the
// well-separated shifts used by spectrum slicing; `near_singular` reports a
// pivot below `pivot_floor * max_abs(A)` so callers can nudge the shift and
// refactor. The signs of D give the inertia (Sylvester).
class BandedLDL {
 public:
  static BandedLDL factor(const BandedHermitian& a, double pivot_floor = 1e-13);

  bool near_singular() const { return near_singular_; }
  std::size_t negative_count() const; // eigenvalue count below the shift
  void solve_inplace(cplx* b) const;
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_ = 0;
  int bw_ = 0;
  bool near_singular_ = false;
  std::vector<double> d_;
  std::vector<std::vector<cplx>> lbands_;
};

} // namespace gapspec
