#pragma once

#include <array>

#include "ssli/tuple.hpp"

namespace ssli {

// Machinery behind the monotonicity proof of the exponential-sum lemma:
// sum-zero triples of fixed norm parametrized by a radius r and an angle
// phi in [0, pi/3], the boundary functions f/h/F, and the radial scaling
// argument.

/// (r, phi) parametrization of a sorted sum-zero triple with
/// sum of squares (3/2) r^2. phi in [0, pi/3], r > 0.
struct SphericalPair {
  double r;
  double phi;

  SphericalPair(double r_in, double phi_in);

  /// The triple (r cos phi, r cos(phi - 2pi/3), r cos(phi + 2pi/3)),
  /// sorted non-increasing by construction on the domain.
  std::array<double, 3> triple() const;

  /// Recovers phi = arccos(lead / r) from the leading entry.
  static SphericalPair from_leading(double lead, double r);
};

/// Sorted sum-zero triple with leading entry `lead` and sum of squares
/// (3/2) r^2: (lead, (-lead + s)/2, (-lead - s)/2) with s = sqrt(3(r^2-lead^2)).
/// Requires lead in [r/2, r].
std::array<double, 3> spherical_from_leading(double lead, double r);

/// f(x) = e^x + e^{(-x+s)/2} + e^{(-x-s)/2}, s = sqrt(3(r^2-x^2));
/// the exponential sum of the triple with leading entry x. Monotone
/// increasing on [r/2, r].
double lemma_f(double x, double r);

/// h(r, phi) = e^{r cos phi} + e^{r cos(phi+2pi/3)} + e^{r cos(phi-2pi/3)};
/// equals f at x = r cos phi. Decreasing in phi, increasing in r.
double lemma_h(double r, double phi);

/// Sign factor of dh/dphi:
/// F(r, phi) = -sin phi - e^{-r sqrt3 sin(phi+pi/3)} sin(phi+2pi/3)
///             - e^{r sqrt3 sin(phi-pi/3)} sin(phi-2pi/3); F <= 0 on the domain.
double lemma_F(double r, double phi);

/// dh/dr = sum of e^{r cos(.)} cos(.) over the three angles; strictly
/// positive for r > 0.
double lemma_dh_dr(double r, double phi);

/// x e^x + y e^y + z e^z for a sum-zero triple; nonnegative by the Chebyshev
/// sum inequality, zero only at the origin.
double chebyshev_exp_identity(double x, double y, double z);

struct ScaledTuple {
  LogTuple t;
  double k;
};

/// Radial scaling t = k z with k = sqrt(sum c^2 / sum z^2) > 1. Requires
/// both tuples sum-zero and sum z^2 strictly below sum c^2. The output
/// satisfies both strict exponential-sum inequalities against z.
ScaledTuple scale_to_norm(const LogTuple& z, const LogTuple& c);

struct Lemma1Equivalence {
  bool exp_inequality;  // sum e^{a_i} <= sum e^{x_i}
  bool lead_le;         // a_lead <= x_lead
  bool trail_le;        // trailing entries: c <= z
};

/// Builds both triples from their leading entries at common radius r and
/// evaluates the three equivalent predicates; they must coincide.
Lemma1Equivalence lemma1_equivalence(double a_lead, double x_lead, double r);

}  // namespace ssli
