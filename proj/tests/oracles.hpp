// Independent reference implementations used only by tests: these must not
// share code paths with the library routines they check.
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ssli/matrix.hpp"

namespace oracle {

/// Elementary symmetric polynomial by explicit subset enumeration (n <= 20).
inline double brute_elem_sym(const std::vector<double>& v, std::size_t k) {
  const std::size_t n = v.size();
  if (n > 20) throw std::invalid_argument("brute_elem_sym: too many elements");
  if (k == 0) return 1.0;
  double total = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    double prod = 1.0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) prod *= v[i];
    total += prod;
  }
  return total;
}

/// Real roots of x^3 + b x^2 + c x + d when all three are real (trigonometric
/// form), sorted non-increasing. Suitable for symmetric-matrix spectra.
inline std::array<double, 3> real_cubic_roots(double b, double c, double d) {
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double shift = -b / 3.0;
  std::array<double, 3> r{};
  if (p >= 0.0) {
    // triple/near-triple root
    r = {shift, shift, shift};
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (p * m);
    arg = std::max(-1.0, std::min(1.0, arg));
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      r[static_cast<std::size_t>(k)] =
          m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) + shift;
  }
  if (r[0] < r[1]) std::swap(r[0], r[1]);
  if (r[1] < r[2]) std::swap(r[1], r[2]);
  if (r[0] < r[1]) std::swap(r[0], r[1]);
  return r;
}

/// Eigenvalues of a symmetric 2x2/3x3 matrix straight from its
/// characteristic polynomial, independent of any iterative eigensolver.
inline std::vector<double> charpoly_eigenvalues(const ssli::SymMat& s) {
  if (s.dim() == 2) {
    const double tr = s.trace(), dt = s.det();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * dt));
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
  }
  const double tr = s.trace();
  const double c2 = ssli::cof(s.full()).trace();
  const auto r = real_cubic_roots(-tr, c2, -s.det());
  return {r[0], r[1], r[2]};
}

/// Matrix exponential by scaling-and-squaring with the degree-13 diagonal
/// Pade approximant.
inline ssli::Mat expm(const ssli::Mat& a_in) {
  using ssli::Mat;
  static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                             1187353796428800.0,  129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,       1323241920.0,
                             40840800.0,          960960.0,            16380.0,
                             182.0,               1.0};
  const int d = a_in.dim();
  double norm1 = 0.0;
  for (int j = 0; j < d; ++j) {
    double col = 0.0;
    for (int i = 0; i < d; ++i) col += std::fabs(a_in(i, j));
    norm1 = std::max(norm1, col);
  }
  const double theta13 = 5.371920351148152;
  int squarings = 0;
  if (norm1 > theta13)
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  Mat a = a_in;
  a *= std::pow(2.0, -squarings);

  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat ident = Mat::identity(d);

  Mat u_inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  Mat u = a * (a6 * u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  Mat v_inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  Mat v = a6 * v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;

  // Solve (V - U) R = (V + U) by Gauss elimination with partial pivoting.
  Mat lhs = v - u;
  Mat rhs = v + u;
  for (int k = 0; k < d; ++k) {
    int piv = k;
    for (int i = k + 1; i < d; ++i)
      if (std::fabs(lhs(i, k)) > std::fabs(lhs(piv, k))) piv = i;
    if (piv != k)
      for (int j = 0; j < d; ++j) {
        std::swap(lhs(k, j), lhs(piv, j));
        std::swap(rhs(k, j), rhs(piv, j));
      }
    for (int i = 0; i < d; ++i) {
      if (i == k) continue;
      const double f = lhs(i, k) / lhs(k, k);
      for (int j = 0; j < d; ++j) {
        lhs(i, j) -= f * lhs(k, j);
        rhs(i, j) -= f * rhs(k, j);
      }
    }
  }
  Mat r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r(i, j) = rhs(i, j) / lhs(i, i);

  for (int s = 0; s < squarings; ++s) r = r * r;
  return r;
}

}  // namespace oracle
