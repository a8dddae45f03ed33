#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ssli/report.hpp"

namespace ssli {

/// Dense real matrix of dimension 2 or 3, row-major, fixed storage.
class Mat {
 public:
  explicit Mat(int dim);
  static Mat identity(int dim);
  static Mat from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return e_[i * dim_ + j]; }
  double& operator()(int i, int j) { return e_[i * dim_ + j]; }

  Mat transpose() const;
  double trace() const;
  double det() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(double s);

  std::string to_json_string() const;
  static Mat from_json_string(const std::string& text);

 private:
  int dim_;
  std::array<double, 9> e_{};
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(double s, Mat a);

/// Symmetric real matrix of dimension 2 or 3; only the upper triangle is
/// stored, so symmetry is exact by construction.
class SymMat {
 public:
  explicit SymMat(int dim);
  static SymMat diagonal(const std::vector<double>& d);
  /// Takes the upper triangle of m (m need not be symmetric).
  static SymMat from_upper(const Mat& m);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return u_[pack(i, j)]; }
  void set(int i, int j, double v) { u_[pack(i, j)] = v; }

  Mat full() const;
  double trace() const;
  double det() const;

 private:
  std::size_t pack(int i, int j) const;
  int dim_;
  std::array<double, 6> u_{};
};

struct EigenDecomp {
  std::vector<double> eigenvalues;  // sorted non-increasing
  Mat eigenvectors;                 // orthonormal columns, matching order
  EigenDecomp() : eigenvectors(2) {}
};

/// Cyclic Jacobi to off-diagonal norm below 1e-14 * ||S||_F. Deterministic
/// eigenvector signs: the largest-magnitude component of each column is
/// made positive.
EigenDecomp sym_eig(const SymMat& s);

/// Principal logarithm of a symmetric positive definite matrix,
/// V diag(log lambda) V^T. Throws std::domain_error if any eigenvalue is
/// nonpositive within tolerance.
SymMat log_spd(const SymMat& p);

/// Symmetric positive definite square root, V diag(sqrt lambda) V^T.
SymMat sqrt_spd(const SymMat& p);

double frobenius_sq(const Mat& m);
double frobenius_sq(const SymMat& m);

/// Cofactor matrix (signed minors); Cof(M) = det(M) M^{-T} for invertible M.
Mat cof(const Mat& m);

/// tr Cof M = e2 of the spectrum (dimension 3), computed in extended
/// precision directly from the principal 2x2 minors.
double trace_cof(const Mat& m);

/// Inverse via the adjugate. Throws std::domain_error when the determinant
/// underflows the scale-aware threshold.
Mat inverse(const Mat& m);

/// Characteristic-polynomial form: tr and tr Cof dominance with equal
/// determinants; conclusion compares ||log P||_F^2. In dimension 2 the
/// tr Cof line equals the determinant and is dropped.
HypothesisReport check_charpol(const SymMat& p1, const SymMat& p2, double tol = kDefaultTol);

/// Frobenius form: ||P||_F^2 and ||P^{-1}||_F^2 dominance with equal
/// determinants; same conclusion as check_charpol.
HypothesisReport check_frobenius(const SymMat& p1, const SymMat& p2, double tol = kDefaultTol);

struct PolarDecomp {
  Mat unitary;      // orthogonal factor
  SymMat hermitian; // SPD factor
  PolarDecomp() : unitary(2), hermitian(2) {}
};

/// Z = U H with U orthogonal and H SPD. H starts from sqrt(Z^T Z) via the
/// symmetric eigensolve; U is then polished by the Newton orthogonal
/// iteration U <- (U + U^{-T})/2, which removes the cond^2 error inherited
/// from forming Z^T Z, and H is recomputed as sym(U^T Z).
PolarDecomp polar(const Mat& z);

/// Trace-free projection X - (tr X / 3) I; dimension 3 only.
Mat dev3(const Mat& x);

/// log sqrt(F^T F) = (1/2) log(F^T F); the logarithmic strain of F.
SymMat hencky(const Mat& f);

/// ||dev3 log sqrt(F^T F)||_F^2 -- squared geodesic distance of the
/// volume-normalized factor to the rotation group. Requires det F > 0;
/// invariant under F -> alpha F.
double geodesic_dist_iso_sq(const Mat& f);

/// Principal logarithm of a real matrix that is diagonalizable over C with
/// no eigenvalue on the closed negative real axis. Eigenvalues come from
/// the characteristic polynomial with Newton polishing; eigenvectors from
/// complex null spaces with full pivoting; conjugate pairs recombine to a
/// real result. Throws std::domain_error for negative-axis eigenvalues,
/// defective eigenstructure, or eigenvector condition beyond 1e8.
Mat log_real_diagonalizable(const Mat& m);

/// (X + X^T)/2.
SymMat sym_part(const Mat& x);

/// Rotation matrix from a (not necessarily normalized) quaternion;
/// normalized Gaussian components give the uniform distribution on SO(3).
Mat rotation_from_quaternion(double w, double x, double y, double z);

}  // namespace ssli
