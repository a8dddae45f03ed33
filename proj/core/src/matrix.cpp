#include "ssli/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ssli {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(int dim, const char* who) {
  if (dim != 2 && dim != 3)
    throw std::invalid_argument(std::string(who) + ": dimension must be 2 or 3");
}

void require_same_dim(const Mat& a, const Mat& b, const char* who) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(int dim) : dim_(dim) { require_dim(dim, "Mat"); }

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<double>>& rows) {
  const int d = static_cast<int>(rows.size());
  require_dim(d, "Mat::from_rows");
  Mat m(d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != d)
      throw std::invalid_argument("Mat::from_rows: matrix must be square");
    for (int j = 0; j < d; ++j) {
      if (!std::isfinite(rows[i][j]))
        throw std::invalid_argument("Mat::from_rows: entries must be finite");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Mat Mat::transpose() const {
  Mat t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) t(i, j) = (*this)(j, i);
  return t;
}

double Mat::trace() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
  return s;
}

namespace {

// The cofactor expansion of a dense ill-conditioned 3x3 matrix cancels with
// amplification ~ |A| |Cof A| / det, which reaches ~1e7 at condition 1e6;
// determinant identities downstream are verified at 1e-10 relative, so the
// expansion runs in quad precision where available.
#if defined(__SIZEOF_FLOAT128__)
using DetFloat = __float128;
#else
using DetFloat = long double;
#endif

}  // namespace

double Mat::det() const {
  const Mat& m = *this;
  if (dim_ == 2)
    return static_cast<double>(static_cast<DetFloat>(m(0, 0)) * m(1, 1) -
                               static_cast<DetFloat>(m(0, 1)) * m(1, 0));
  const DetFloat a = m(0, 0), b = m(0, 1), c = m(0, 2);
  const DetFloat d = m(1, 0), e = m(1, 1), f = m(1, 2);
  const DetFloat g = m(2, 0), h = m(2, 1), i = m(2, 2);
  return static_cast<double>(a * (e * i - f * h) - b * (d * i - f * g) +
                             c * (d * h - e * g));
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_dim(*this, o, "Mat::operator+=");
  for (int i = 0; i < dim_ * dim_; ++i) e_[i] += o.e_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_dim(*this, o, "Mat::operator-=");
  for (int i = 0; i < dim_ * dim_; ++i) e_[i] -= o.e_[i];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (int i = 0; i < dim_ * dim_; ++i) e_[i] *= s;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(double s, Mat a) { return a *= s; }

Mat operator*(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "Mat::operator*");
  const int d = a.dim();
  Mat c(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

std::string Mat::to_json_string() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < dim_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < dim_; ++j) row.push_back((*this)(i, j));
    rows.push_back(row);
  }
  return rows.dump();
}

Mat Mat::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("matrix JSON parse error: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
    std::vector<double> row;
    for (const auto& x : r) {
      if (!x.is_number()) throw std::invalid_argument("matrix entries must be numbers");
      row.push_back(x.get<double>());
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

// ---------------------------------------------------------------------------
// SymMat

SymMat::SymMat(int dim) : dim_(dim) { require_dim(dim, "SymMat"); }

std::size_t SymMat::pack(int i, int j) const {
  if (i > j) std::swap(i, j);
  // row-wise packed upper triangle
  return static_cast<std::size_t>(i * dim_ - i * (i - 1) / 2 + (j - i));
}

SymMat SymMat::diagonal(const std::vector<double>& d) {
  SymMat s(static_cast<int>(d.size()));
  for (int i = 0; i < s.dim_; ++i) s.set(i, i, d[static_cast<std::size_t>(i)]);
  return s;
}

SymMat SymMat::from_upper(const Mat& m) {
  SymMat s(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j) s.set(i, j, m(i, j));
  return s;
}

Mat SymMat::full() const {
  Mat m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

double SymMat::trace() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
  return s;
}

double SymMat::det() const { return full().det(); }

// ---------------------------------------------------------------------------
// Eigensolve and SPD functions

EigenDecomp sym_eig(const SymMat& s) {
  // Extended-precision working arrays: the eigenvalue/characteristic
  // identities downstream (e3 of the spectrum vs the determinant) are
  // verified at 1e-10 relative even at condition 1e6, which double-precision
  // rotations cannot deliver for dense graded spectra.
  const int n = s.dim();
  long double a[3][3] = {{0}};
  long double v[3][3] = {{0}};
  for (int i = 0; i < n; ++i) {
    v[i][i] = 1.0L;
    for (int j = 0; j < n; ++j) a[i][j] = s(i, j);
  }

  // Stop when the off-diagonal norm is negligible absolutely and relative to
  // the local diagonal (the relative criterion preserves small eigenvalues).
  const long double off_tol = 1e-14L * std::sqrt(static_cast<long double>(frobenius_sq(s)));
  const long double rel_tol = 1e-16L;
  for (int sweep = 0; sweep < 64; ++sweep) {
    long double off = 0.0L;
    bool rel_converged = true;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        off += 2.0L * a[p][q] * a[p][q];
        if (a[p][q] * a[p][q] > rel_tol * rel_tol * std::fabs(a[p][p] * a[q][q]))
          rel_converged = false;
      }
    if (std::sqrt(off) <= off_tol && rel_converged) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0L) continue;
        const long double theta = (a[q][q] - a[p][p]) / (2.0L * a[p][q]);
        const long double t = (theta >= 0 ? 1.0L : -1.0L) /
                              (std::fabs(theta) + std::sqrt(theta * theta + 1.0L));
        const long double c = 1.0L / std::sqrt(t * t + 1.0L);
        const long double sn = t * c;
        const long double tau = sn / (1.0L + c);
        const long double apq = a[p][q];
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0L;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const long double arp = a[r][p], arq = a[r][q];
            a[r][p] = a[p][r] = arp - sn * (arq + tau * arp);
            a[r][q] = a[q][r] = arq + sn * (arp - tau * arq);
          }
          const long double vrp = v[r][p], vrq = v[r][q];
          v[r][p] = vrp - sn * (vrq + tau * vrp);
          v[r][q] = vrq + sn * (vrp - tau * vrq);
        }
      }
    }
  }

  // Sort non-increasing, carry columns, fix signs deterministically.
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.begin() + n,
                   [&](int i, int j) { return a[i][i] > a[j][j]; });
  EigenDecomp d;
  d.eigenvalues.resize(static_cast<std::size_t>(n));
  d.eigenvectors = Mat(n);
  for (int k = 0; k < n; ++k) {
    d.eigenvalues[static_cast<std::size_t>(k)] = static_cast<double>(a[idx[k]][idx[k]]);
    int imax = 0;
    for (int r = 1; r < n; ++r)
      if (std::fabs(v[r][idx[k]]) > std::fabs(v[imax][idx[k]])) imax = r;
    const long double sign = v[imax][idx[k]] < 0.0L ? -1.0L : 1.0L;
    for (int r = 0; r < n; ++r)
      d.eigenvectors(r, k) = static_cast<double>(sign * v[r][idx[k]]);
  }
  return d;
}

namespace {

SymMat spd_map(const SymMat& p, double (*f)(double), const char* who) {
  const EigenDecomp d = sym_eig(p);
  const double lam_max = d.eigenvalues.front();
  const double lam_min = d.eigenvalues.back();
  if (!(lam_min > 1e-14 * std::max(lam_max, 0.0)) || !(lam_min > 0.0)) {
    std::ostringstream msg;
    msg << who << ": matrix is not positive definite (min eigenvalue " << lam_min << ")";
    throw std::domain_error(msg.str());
  }
  const int n = p.dim();
  Mat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += d.eigenvectors(i, k) * f(d.eigenvalues[static_cast<std::size_t>(k)]) *
             d.eigenvectors(j, k);
      m(i, j) = s;
    }
  return sym_part(m);
}

double log_wrap(double x) { return std::log(x); }
double sqrt_wrap(double x) { return std::sqrt(x); }

}  // namespace

SymMat log_spd(const SymMat& p) { return spd_map(p, log_wrap, "log_spd"); }
SymMat sqrt_spd(const SymMat& p) { return spd_map(p, sqrt_wrap, "sqrt_spd"); }

double frobenius_sq(const Mat& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s += m(i, j) * m(i, j);
  return s;
}

double frobenius_sq(const SymMat& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s += m(i, j) * m(i, j);
  return s;
}

Mat cof(const Mat& m) {
  const int d = m.dim();
  Mat c(d);
  if (d == 2) {
    c(0, 0) = m(1, 1);
    c(0, 1) = -m(1, 0);
    c(1, 0) = -m(0, 1);
    c(1, 1) = m(0, 0);
    return c;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // Cyclic index choice builds the sign in.
      c(i, j) = m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1);
    }
  return c;
}

double trace_cof(const Mat& m) {
  if (m.dim() == 2)
    return m.trace();  // both 1x1 principal minors
  DetFloat t = 0;
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    t += static_cast<DetFloat>(m(i1, i1)) * m(i2, i2) -
         static_cast<DetFloat>(m(i1, i2)) * m(i2, i1);
  }
  return static_cast<double>(t);
}

Mat inverse(const Mat& m) {
  const double dt = m.det();
  const double norm = std::sqrt(frobenius_sq(m));
  if (!(std::fabs(dt) > 1e-14 * std::pow(std::max(norm, 1e-300), m.dim())))
    throw std::domain_error("inverse: matrix is numerically singular");
  Mat adj = cof(m).transpose();
  adj *= 1.0 / dt;
  return adj;
}

// ---------------------------------------------------------------------------
// Matrix-level formulation checkers

HypothesisReport check_charpol(const SymMat& p1, const SymMat& p2, double tol) {
  if (p1.dim() != p2.dim())
    throw std::invalid_argument("check_charpol: dimension mismatch");
  const double c1 = frobenius_sq(log_spd(p1));  // throws for non-SPD input
  const double c2 = frobenius_sq(log_spd(p2));
  const MarginLine tr_line = dominance_line(p1.trace(), p2.trace());
  std::vector<double> margins{tr_line.margin}, scales{tr_line.scale};
  if (p1.dim() == 3) {
    const MarginLine cof_line = dominance_line(trace_cof(p1.full()), trace_cof(p2.full()));
    margins.push_back(cof_line.margin);
    scales.push_back(cof_line.scale);
  }
  // In 2D, tr Cof equals the determinant, so that line is vacuous and only
  // the trace margin plus the determinant defect remain.
  const MarginLine concl = dominance_line(c1, c2);
  return HypothesisReport::evaluate(Formulation::kCharPol, std::move(margins),
                                    std::move(scales),
                                    {relative_defect(p1.det(), p2.det())}, concl.margin,
                                    concl.scale, tol);
}

HypothesisReport check_frobenius(const SymMat& p1, const SymMat& p2, double tol) {
  if (p1.dim() != p2.dim())
    throw std::invalid_argument("check_frobenius: dimension mismatch");
  const double c1 = frobenius_sq(log_spd(p1));
  const double c2 = frobenius_sq(log_spd(p2));
  const MarginLine m1 = dominance_line(frobenius_sq(p1), frobenius_sq(p2));
  const MarginLine m2 =
      dominance_line(frobenius_sq(inverse(p1.full())), frobenius_sq(inverse(p2.full())));
  const MarginLine concl = dominance_line(c1, c2);
  return HypothesisReport::evaluate(Formulation::kFrobNorm, {m1.margin, m2.margin},
                                    {m1.scale, m2.scale},
                                    {relative_defect(p1.det(), p2.det())}, concl.margin,
                                    concl.scale, tol);
}

// ---------------------------------------------------------------------------
// Polar decomposition and strain measures

PolarDecomp polar(const Mat& z) {
  const int d = z.dim();
  const double norm = std::sqrt(frobenius_sq(z));
  const double dt = z.det();
  const double threshold = 1e-12 * std::pow(norm, d);
  if (!(std::fabs(dt) > threshold)) {
    std::ostringstream msg;
    msg << "polar: matrix numerically singular (|det| = " << std::fabs(dt)
        << ", threshold = " << threshold << ")";
    throw std::domain_error(msg.str());
  }
  // Scaled Newton iteration X <- (mu X + (mu X)^{-T}) / 2 started at Z. This
  // is backward stable, unlike the explicit sqrt(Z^T Z) route whose Z^T Z
  // formation costs cond(Z)^2 in the small singular directions and cannot
  // meet the 1e-10 residuals at condition 1e6.
  Mat u = z;
  for (int it = 0; it < 60; ++it) {
    Mat g = u.transpose() * u;
    g -= Mat::identity(d);
    if (frobenius_sq(g) <= 1e-28) break;
    const double mu = std::pow(std::fabs(u.det()), -1.0 / d);  // det scaling
    Mat scaled = u;
    scaled *= mu;
    u = 0.5 * (scaled + inverse(scaled).transpose());
  }
  PolarDecomp p;
  p.unitary = u;
  p.hermitian = sym_part(u.transpose() * z);
  return p;
}

Mat dev3(const Mat& x) {
  if (x.dim() != 3) throw std::invalid_argument("dev3: dimension must be 3");
  Mat out = x;
  const double mean = x.trace() / 3.0;
  for (int i = 0; i < 3; ++i) out(i, i) -= mean;
  return out;
}

SymMat hencky(const Mat& f) {
  const double norm = std::sqrt(frobenius_sq(f));
  if (!(std::fabs(f.det()) > 1e-12 * std::pow(norm, f.dim())))
    throw std::domain_error("hencky: deformation gradient is numerically singular");
  const SymMat c = sym_part(f.transpose() * f);
  const SymMat l = log_spd(c);
  SymMat half(l.dim());
  for (int i = 0; i < l.dim(); ++i)
    for (int j = i; j < l.dim(); ++j) half.set(i, j, 0.5 * l(i, j));
  return half;
}

double geodesic_dist_iso_sq(const Mat& f) {
  if (f.dim() != 3) throw std::invalid_argument("geodesic_dist_iso_sq: dimension must be 3");
  if (!(f.det() > 0.0))
    throw std::domain_error("geodesic_dist_iso_sq: requires det F > 0");
  return frobenius_sq(dev3(hencky(f).full()));
}

SymMat sym_part(const Mat& x) {
  SymMat s(x.dim());
  for (int i = 0; i < x.dim(); ++i)
    for (int j = i; j < x.dim(); ++j) s.set(i, j, 0.5 * (x(i, j) + x(j, i)));
  return s;
}

Mat rotation_from_quaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("rotation_from_quaternion: zero quaternion");
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  Mat r(3);
  r(0, 0) = 1 - 2 * (y * y + z * z);
  r(0, 1) = 2 * (x * y - w * z);
  r(0, 2) = 2 * (x * z + w * y);
  r(1, 0) = 2 * (x * y + w * z);
  r(1, 1) = 1 - 2 * (x * x + z * z);
  r(1, 2) = 2 * (y * z - w * x);
  r(2, 0) = 2 * (x * z - w * y);
  r(2, 1) = 2 * (y * z + w * x);
  r(2, 2) = 1 - 2 * (x * x + y * y);
  return r;
}

// ---------------------------------------------------------------------------
// Principal logarithm of a real diagonalizable matrix

namespace {

using Cx = std::complex<double>;
using CxMat = std::array<Cx, 9>;  // row-major, dim x dim used

/// Roots of x^3 + b x^2 + c x + d (real coefficients), Newton-polished.
std::array<Cx, 3> cubic_roots(double b, double c, double d) {
  const double q = (b * b - 3.0 * c) / 9.0;
  const double r = (2.0 * b * b * b - 9.0 * b * c + 27.0 * d) / 54.0;
  const double r2 = r * r, q3 = q * q * q;
  std::array<Cx, 3> roots;
  if (r2 < q3) {
    const double theta = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
    const double m = -2.0 * std::sqrt(q);
    roots[0] = m * std::cos(theta / 3.0) - b / 3.0;
    roots[1] = m * std::cos((theta + 2.0 * kPi) / 3.0) - b / 3.0;
    roots[2] = m * std::cos((theta - 2.0 * kPi) / 3.0) - b / 3.0;
  } else {
    const double sgn = r >= 0.0 ? 1.0 : -1.0;
    const double a = -sgn * std::cbrt(std::fabs(r) + std::sqrt(std::max(0.0, r2 - q3)));
    const double bb = a != 0.0 ? q / a : 0.0;
    roots[0] = a + bb - b / 3.0;
    roots[1] = Cx(-0.5 * (a + bb) - b / 3.0, std::numbers::sqrt3 / 2.0 * (a - bb));
    roots[2] = std::conj(roots[1]);
  }
  for (auto& x : roots) {
    for (int it = 0; it < 2; ++it) {
      const Cx p = ((x + b) * x + c) * x + d;
      const Cx dp = (3.0 * x + 2.0 * b) * x + c;
      if (std::abs(dp) == 0.0) break;
      const Cx step = p / dp;
      if (!(std::abs(step) < 0.5 * (1.0 + std::abs(x)))) break;
      x -= step;
    }
  }
  return roots;
}

/// Null-space basis of the dim x dim complex matrix via Gaussian elimination
/// with full pivoting; pivots with magnitude <= pivot_tol count as zero.
std::vector<std::array<Cx, 3>> complex_nullspace(CxMat b, int dim, double pivot_tol) {
  std::array<int, 3> col{0, 1, 2};
  auto at = [&](int i, int j) -> Cx& { return b[static_cast<std::size_t>(i * dim + j)]; };

  int rank = 0;
  for (int k = 0; k < dim; ++k) {
    int pi = k, pj = k;
    double best = 0.0;
    for (int i = k; i < dim; ++i)
      for (int j = k; j < dim; ++j)
        if (std::abs(at(i, j)) > best) {
          best = std::abs(at(i, j));
          pi = i;
          pj = j;
        }
    if (best <= pivot_tol) break;
    for (int j = 0; j < dim; ++j) std::swap(at(k, j), at(pi, j));
    for (int i = 0; i < dim; ++i) std::swap(at(i, k), at(i, pj));
    std::swap(col[k], col[pj]);
    for (int i = k + 1; i < dim; ++i) {
      const Cx f = at(i, k) / at(k, k);
      for (int j = k; j < dim; ++j) at(i, j) -= f * at(k, j);
    }
    ++rank;
  }

  std::vector<std::array<Cx, 3>> basis;
  for (int free = rank; free < dim; ++free) {
    std::array<Cx, 3> xp{};  // permuted coordinates
    xp[static_cast<std::size_t>(free)] = 1.0;
    for (int i = rank - 1; i >= 0; --i) {
      Cx s = 0.0;
      for (int j = i + 1; j < dim; ++j) s += at(i, j) * xp[static_cast<std::size_t>(j)];
      xp[static_cast<std::size_t>(i)] = -s / at(i, i);
    }
    std::array<Cx, 3> x{};
    double nrm = 0.0;
    for (int j = 0; j < dim; ++j) {
      x[static_cast<std::size_t>(col[j])] = xp[static_cast<std::size_t>(j)];
      nrm += std::norm(xp[static_cast<std::size_t>(j)]);
    }
    nrm = std::sqrt(nrm);
    for (int j = 0; j < dim; ++j) x[static_cast<std::size_t>(j)] /= nrm;
    basis.push_back(x);
  }
  return basis;
}

Cx cx_det(const CxMat& m, int dim) {
  auto at = [&](int i, int j) { return m[static_cast<std::size_t>(i * dim + j)]; };
  if (dim == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

CxMat cx_inverse(const CxMat& m, int dim, const char* who) {
  const Cx dt = cx_det(m, dim);
  double scale = 0.0;
  for (int i = 0; i < dim * dim; ++i) scale += std::norm(m[static_cast<std::size_t>(i)]);
  scale = std::pow(std::sqrt(scale), dim);
  if (!(std::abs(dt) > 1e-14 * std::max(scale, 1e-300)))
    throw std::domain_error(std::string(who) + ": eigenvector matrix is singular");
  auto at = [&](int i, int j) { return m[static_cast<std::size_t>(i * dim + j)]; };
  CxMat inv{};
  if (dim == 2) {
    inv[0] = at(1, 1) / dt;
    inv[1] = -at(0, 1) / dt;
    inv[2] = -at(1, 0) / dt;
    inv[3] = at(0, 0) / dt;
    return inv;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // adj = Cof^T: note the (j,i) indexing
      inv[static_cast<std::size_t>(i * 3 + j)] =
          (at(j1, i1) * at(j2, i2) - at(j1, i2) * at(j2, i1)) / dt;
    }
  return inv;
}

}  // namespace

Mat log_real_diagonalizable(const Mat& m) {
  const int d = m.dim();
  const double norm = std::sqrt(frobenius_sq(m));
  if (!(std::fabs(m.det()) > 1e-12 * std::pow(norm, d)))
    throw std::domain_error("log_real_diagonalizable: matrix is numerically singular");

  // Eigenvalues from the characteristic polynomial.
  std::array<Cx, 3> lam;
  int nlam = d;
  if (d == 2) {
    const double tr = m.trace(), dt = m.det();
    const Cx disc = Cx(tr * tr - 4.0 * dt, 0.0);
    const Cx s = std::sqrt(disc);
    lam[0] = (tr + s) / 2.0;
    lam[1] = (tr - s) / 2.0;
  } else {
    lam = cubic_roots(-m.trace(), cof(m).trace(), -m.det());
  }

  double specrad = 0.0;
  for (int i = 0; i < nlam; ++i) specrad = std::max(specrad, std::abs(lam[i]));
  for (int i = 0; i < nlam; ++i) {
    if (lam[i].real() <= 0.0 && std::fabs(lam[i].imag()) <= 1e-10 * specrad)
      throw std::domain_error(
          "log_real_diagonalizable: eigenvalue on the closed negative real axis");
  }

  // Group numerically coincident eigenvalues so repeated-spectrum inputs get
  // a full eigenbasis from one null-space solve. The closed-form cubic splits
  // an exact double root by ~sqrt(eps) * |root|, so the cluster width must
  // sit well above that.
  const double cluster_tol = 1e-6 * specrad;
  std::vector<std::vector<int>> clusters;
  std::vector<bool> used(static_cast<std::size_t>(nlam), false);
  for (int i = 0; i < nlam; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cluster{i};
    used[static_cast<std::size_t>(i)] = true;
    for (int j = i + 1; j < nlam; ++j) {
      if (!used[static_cast<std::size_t>(j)] && std::abs(lam[i] - lam[j]) <= cluster_tol) {
        cluster.push_back(j);
        used[static_cast<std::size_t>(j)] = true;
      }
    }
    clusters.push_back(std::move(cluster));
  }

  // Cluster means: a multiple root from the closed-form cubic is only
  // sqrt(eps)-accurate, but at most one cluster can have size > 1 in
  // dimension <= 3, so its mean is recovered through the exact trace.
  std::vector<Cx> means(clusters.size());
  int multi = -1;
  Cx simple_sum = 0.0;
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    Cx mean = 0.0;
    for (int i : clusters[ci]) mean += lam[i];
    means[ci] = mean / static_cast<double>(clusters[ci].size());
    if (clusters[ci].size() > 1)
      multi = static_cast<int>(ci);
    else
      simple_sum += means[ci];
  }
  if (multi >= 0)
    means[static_cast<std::size_t>(multi)] =
        (m.trace() - simple_sum) / static_cast<double>(clusters[static_cast<std::size_t>(multi)].size());

  CxMat v{};
  std::array<Cx, 3> diag{};
  int filled = 0;
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    const auto& cluster = clusters[ci];
    const Cx mean = means[ci];

    CxMat b{};
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        b[static_cast<std::size_t>(i * d + j)] = Cx(m(i, j), 0.0) - (i == j ? mean : Cx(0.0));
    const auto basis = complex_nullspace(b, d, cluster_tol);
    if (basis.size() < cluster.size())
      throw std::domain_error("log_real_diagonalizable: defective eigenstructure");
    for (std::size_t c = 0; c < cluster.size(); ++c) {
      for (int i = 0; i < d; ++i)
        v[static_cast<std::size_t>(i * d + filled)] = basis[c][static_cast<std::size_t>(i)];
      diag[static_cast<std::size_t>(filled)] = cluster.size() > 1 ? mean : lam[cluster[c]];
      ++filled;
    }
  }

  const CxMat vinv = cx_inverse(v, d, "log_real_diagonalizable");
  double nv = 0.0, nvi = 0.0;
  for (int i = 0; i < d * d; ++i) {
    nv += std::norm(v[static_cast<std::size_t>(i)]);
    nvi += std::norm(vinv[static_cast<std::size_t>(i)]);
  }
  if (std::sqrt(nv) * std::sqrt(nvi) > 1e8)
    throw std::domain_error(
        "log_real_diagonalizable: eigenvector matrix condition number exceeds 1e8");

  // L = V diag(log lambda) V^{-1}; std::log takes the principal branch.
  std::array<Cx, 3> loglam;
  for (int i = 0; i < d; ++i) loglam[static_cast<std::size_t>(i)] = std::log(diag[static_cast<std::size_t>(i)]);
  Mat out(d);
  double max_real = 0.0, max_imag = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Cx s = 0.0;
      for (int k = 0; k < d; ++k)
        s += v[static_cast<std::size_t>(i * d + k)] * loglam[static_cast<std::size_t>(k)] *
             vinv[static_cast<std::size_t>(k * d + j)];
      out(i, j) = s.real();
      max_real = std::max(max_real, std::fabs(s.real()));
      max_imag = std::max(max_imag, std::fabs(s.imag()));
    }
  if (max_imag > 1e-6 * std::max(1.0, max_real))
    throw std::domain_error(
        "log_real_diagonalizable: result failed to recombine to a real matrix");
  return out;
}

}  // namespace ssli
