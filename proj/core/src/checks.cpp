#include "ssli/checks.hpp"

#include <cmath>
#include <stdexcept>

namespace ssli {

namespace {

void require_length(const PositiveTuple& t, std::size_t n, const char* who) {
  if (t.size() != n)
    throw std::invalid_argument(std::string(who) + ": tuple length must be " +
                                std::to_string(n));
}

void require_length(const LogTuple& t, std::size_t n, const char* who) {
  if (t.size() != n)
    throw std::invalid_argument(std::string(who) + ": tuple length must be " +
                                std::to_string(n));
}

double abs_sum(const LogTuple& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) s += std::fabs(t[i]);
  return s;
}

double sum_sq(const LogTuple& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) s += t[i] * t[i];
  return s;
}

}  // namespace

HypothesisReport check_tuple3(const PositiveTuple& y, const PositiveTuple& a, double tol) {
  require_length(y, 3, "check_tuple3");
  require_length(a, 3, "check_tuple3");
  const auto ey = elem_sym_all(y);
  const auto ea = elem_sym_all(a);
  const MarginLine m1 = dominance_line(ey[1], ea[1]);
  const MarginLine m2 = dominance_line(ey[2], ea[2]);
  const MarginLine concl = dominance_line(sum_sq_log(y), sum_sq_log(a));
  return HypothesisReport::evaluate(Formulation::kTuple3, {m1.margin, m2.margin},
                                    {m1.scale, m2.scale},
                                    {relative_defect(ey[3], ea[3])}, concl.margin,
                                    concl.scale, tol);
}

HypothesisReport check_elem_sym(const PositiveTuple& y, const PositiveTuple& a, double tol) {
  if (y.size() != a.size())
    throw std::invalid_argument("check_elem_sym: tuples must have equal length");
  const std::size_t n = y.size();
  const auto ey = elem_sym_all(y);
  const auto ea = elem_sym_all(a);
  std::vector<double> margins(n - 1), scales(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    const MarginLine m = dominance_line(ey[i], ea[i]);
    margins[i - 1] = m.margin;
    scales[i - 1] = m.scale;
  }
  const MarginLine concl = dominance_line(sum_sq_log(y), sum_sq_log(a));
  return HypothesisReport::evaluate(Formulation::kElemSym, std::move(margins),
                                    std::move(scales),
                                    {relative_defect(ey[n], ea[n])}, concl.margin,
                                    concl.scale, tol);
}

HypothesisReport check_inverse_sum(const PositiveTuple& y, const PositiveTuple& a,
                                   double tol) {
  require_length(y, 3, "check_inverse_sum");
  require_length(a, 3, "check_inverse_sum");
  double inv_y = 0.0, inv_a = 0.0, sum_y = 0.0, sum_a = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    inv_y += 1.0 / y[i];
    inv_a += 1.0 / a[i];
    sum_y += y[i];
    sum_a += a[i];
  }
  const MarginLine m1 = dominance_line(sum_y, sum_a);
  const MarginLine m2 = dominance_line(inv_y, inv_a);
  const MarginLine concl = dominance_line(sum_sq_log(y), sum_sq_log(a));
  return HypothesisReport::evaluate(
      Formulation::kInverseSum, {m1.margin, m2.margin}, {m1.scale, m2.scale},
      {relative_defect(elem_sym(3, y), elem_sym(3, a))}, concl.margin, concl.scale, tol);
}

HypothesisReport check_means(const PositiveTuple& y, const PositiveTuple& a, double tol) {
  require_length(y, 3, "check_means");
  require_length(a, 3, "check_means");
  const MeanSet my = means(y);
  const MeanSet ma = means(a);
  const MarginLine m1 = dominance_line(my.arithmetic, ma.arithmetic);
  // Reversed direction: the harmonic mean of a must dominate. Positive
  // margin still means "satisfied".
  const MarginLine m2 = dominance_line(ma.harmonic, my.harmonic);
  const MarginLine concl = dominance_line(sum_sq_log(y), sum_sq_log(a));
  return HypothesisReport::evaluate(Formulation::kMeans, {m1.margin, m2.margin},
                                    {m1.scale, m2.scale},
                                    {relative_defect(my.geometric, ma.geometric)},
                                    concl.margin, concl.scale, tol);
}

HypothesisReport check_squared(const PositiveTuple& x, const PositiveTuple& d, double tol) {
  require_length(x, 3, "check_squared");
  require_length(d, 3, "check_squared");
  std::vector<double> xs(3), ds(3);
  for (std::size_t i = 0; i < 3; ++i) {
    xs[i] = x[i] * x[i];
    ds[i] = d[i] * d[i];
  }
  const PositiveTuple x2{std::move(xs)}, d2{std::move(ds)};
  const auto ey = elem_sym_all(x2);
  const auto ea = elem_sym_all(d2);
  const MarginLine m1 = dominance_line(ey[1], ea[1]);
  const MarginLine m2 = dominance_line(ey[2], ea[2]);
  // The conclusion stays in the unsquared variables: (log x^2)^2 would just
  // rescale both sides by 4.
  const MarginLine concl = dominance_line(sum_sq_log(x), sum_sq_log(d));
  return HypothesisReport::evaluate(Formulation::kSquared, {m1.margin, m2.margin},
                                    {m1.scale, m2.scale},
                                    {relative_defect(ey[3], ea[3])}, concl.margin,
                                    concl.scale, tol);
}

HypothesisReport check_exp(const LogTuple& z, const LogTuple& c, double tol) {
  require_length(z, 3, "check_exp");
  require_length(c, 3, "check_exp");
  const double sum_scale = std::max({1.0, abs_sum(z), abs_sum(c)});
  const double defect = (z.sum() - c.sum()) / sum_scale;
  if (std::fabs(defect) > tol)
    throw std::invalid_argument("check_exp: sums differ beyond tolerance");
  double ez = 0.0, ec = 0.0, enz = 0.0, enc = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    ez += std::exp(z[i]);
    ec += std::exp(c[i]);
    enz += std::exp(-z[i]);
    enc += std::exp(-c[i]);
  }
  const MarginLine m1 = dominance_line(ez, ec);
  const MarginLine m2 = dominance_line(enz, enc);
  const MarginLine concl = dominance_line(sum_sq(z), sum_sq(c));
  return HypothesisReport::evaluate(Formulation::kExp, {m1.margin, m2.margin},
                                    {m1.scale, m2.scale}, {defect}, concl.margin,
                                    concl.scale, tol);
}

HypothesisReport check_exp_zero_sum(const LogTuple& z, const LogTuple& c, double tol) {
  require_length(z, 3, "check_exp_zero_sum");
  require_length(c, 3, "check_exp_zero_sum");
  const double dz = z.sum() / std::max(1.0, abs_sum(z));
  const double dc = c.sum() / std::max(1.0, abs_sum(c));
  if (std::fabs(dz) > tol || std::fabs(dc) > tol)
    throw std::invalid_argument("check_exp_zero_sum: tuples must sum to zero");
  HypothesisReport r = check_exp(z, c, tol);
  return HypothesisReport::evaluate(Formulation::kExpZeroSum, r.margins, r.margin_scales,
                                    {dz, dc}, r.conclusion_margin, r.conclusion_scale,
                                    tol);
}

HypothesisReport check_2d(const PositiveTuple& x, const PositiveTuple& d, double tol) {
  require_length(x, 2, "check_2d");
  require_length(d, 2, "check_2d");
  const double sx = x[0] * x[0] + x[1] * x[1];
  const double sd = d[0] * d[0] + d[1] * d[1];
  const MarginLine m1 = dominance_line(sx, sd);
  // Reciprocal condition; automatic under equal products, reported anyway.
  const double ix = 1.0 / (x[0] * x[0]) + 1.0 / (x[1] * x[1]);
  const double id = 1.0 / (d[0] * d[0]) + 1.0 / (d[1] * d[1]);
  const MarginLine m2 = dominance_line(ix, id);
  const MarginLine concl = dominance_line(sum_sq_log(x), sum_sq_log(d));
  return HypothesisReport::evaluate(Formulation::kSquared, {m1.margin, m2.margin},
                                    {m1.scale, m2.scale},
                                    {relative_defect(x[0] * x[1], d[0] * d[1])},
                                    concl.margin, concl.scale, tol);
}

LogTuple normalize_sum_zero(const LogTuple& z) {
  const double mean = z.sum() / static_cast<double>(z.size());
  std::vector<double> v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) v[i] = z[i] - mean;
  return LogTuple(std::move(v));
}

bool equality_case(const LogTuple& z, const LogTuple& c, double tol) {
  const HypothesisReport rep = check_exp(z, c, tol);
  if (!rep.hypotheses_hold)
    throw std::invalid_argument("equality_case: exponential-form hypotheses must hold");
  const bool equal = std::fabs(rep.conclusion_margin) <= tol * rep.conclusion_scale;
  if (equal) {
    // Rigidity: equal squared sums under the hypotheses force coincidence.
    // A failure here would contradict the theorem, not the caller.
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (std::fabs(z[i] - c[i]) > kRigidityTol)
        throw std::logic_error("equality_case: equal norms without coincidence");
    }
  }
  return equal;
}

}  // namespace ssli
