#pragma once

#include "ssli/report.hpp"
#include "ssli/tuple.hpp"

namespace ssli {

// Hypothesis/conclusion checkers for the tuple-level formulations. Each
// returns signed margins (positive = satisfied), equality defects, and the
// squared-log conclusion margin. The matrix-level formulations (charpol,
// frobenius) live in matrix.hpp.

/// Triples with e1/e2 dominance and equal products; conclusion compares the
/// sums of squared logarithms.
HypothesisReport check_tuple3(const PositiveTuple& y, const PositiveTuple& a,
                              double tol = kDefaultTol);

/// General-n elementary-symmetric form: e_i(y) >= e_i(a) for i < n and
/// e_n(y) = e_n(a). For n = 3 this coincides with check_tuple3. Also the
/// per-trial checker behind the conjecture campaigns.
HypothesisReport check_elem_sym(const PositiveTuple& y, const PositiveTuple& a,
                                double tol = kDefaultTol);

/// e1 dominance plus reciprocal-sum dominance (equivalent to e2 under equal
/// products).
HypothesisReport check_inverse_sum(const PositiveTuple& y, const PositiveTuple& a,
                                   double tol = kDefaultTol);

/// Mean form: A(y) >= A(a), H(a) >= H(y) (note the reversed direction; the
/// margin is recorded as H(a) - H(y) so positive still means satisfied),
/// G(y) = G(a).
HypothesisReport check_means(const PositiveTuple& y, const PositiveTuple& a,
                             double tol = kDefaultTol);

/// Squared-variable triples: hypotheses on x_i^2 vs d_i^2; the conclusion is
/// recorded in the unsquared variables, i.e. sum (log x_i)^2 - sum (log d_i)^2.
HypothesisReport check_squared(const PositiveTuple& x, const PositiveTuple& d,
                               double tol = kDefaultTol);

/// Exponential form on log-domain triples with equal sums. A sum mismatch
/// beyond tol is an argument error, not a failed hypothesis.
HypothesisReport check_exp(const LogTuple& z, const LogTuple& c, double tol = kDefaultTol);

/// Exponential form restricted to sum-zero triples; both sums must vanish.
HypothesisReport check_exp_zero_sum(const LogTuple& z, const LogTuple& c,
                                    double tol = kDefaultTol);

/// Two-variable squared form with equal products. The reciprocal condition
/// is automatic under equal products; it is reported as a second, derived
/// margin line.
HypothesisReport check_2d(const PositiveTuple& x, const PositiveTuple& d,
                          double tol = kDefaultTol);

/// z - mean(z) entrywise; output sums to zero. Preserves the sign of
/// conclusion margins between equal-sum pairs.
LogTuple normalize_sum_zero(const LogTuple& z);

/// Equality (rigidity) case: with the exponential-form hypotheses holding,
/// returns true iff the squared sums coincide within tol; a true result is
/// cross-checked against entrywise coincidence (within kRigidityTol), which
/// the underlying theorem guarantees.
bool equality_case(const LogTuple& z, const LogTuple& c, double tol = kDefaultTol);

}  // namespace ssli
