#include "ssli/lemma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ssli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDomainSlack = 1e-12;  // absorbs rounding at interval ends

void require_radius(double r, const char* who) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument(std::string(who) + ": r must be positive");
}

void require_angle(double phi, const char* who) {
  if (!(phi >= -kDomainSlack) || !(phi <= kPi / 3.0 + kDomainSlack))
    throw std::invalid_argument(std::string(who) + ": phi must lie in [0, pi/3]");
}

void require_leading(double lead, double r, const char* who) {
  if (!(lead >= r / 2.0 - kDomainSlack * r) || !(lead <= r + kDomainSlack * r))
    throw std::invalid_argument(std::string(who) + ": leading entry must lie in [r/2, r]");
}

}  // namespace

SphericalPair::SphericalPair(double r_in, double phi_in) : r(r_in), phi(phi_in) {
  require_radius(r, "SphericalPair");
  require_angle(phi, "SphericalPair");
  phi = std::clamp(phi, 0.0, kPi / 3.0);
}

std::array<double, 3> SphericalPair::triple() const {
  return {r * std::cos(phi), r * std::cos(phi - 2.0 * kPi / 3.0),
          r * std::cos(phi + 2.0 * kPi / 3.0)};
}

SphericalPair SphericalPair::from_leading(double lead, double r) {
  require_radius(r, "SphericalPair::from_leading");
  require_leading(lead, r, "SphericalPair::from_leading");
  return SphericalPair(r, std::acos(std::clamp(lead / r, -1.0, 1.0)));
}

std::array<double, 3> spherical_from_leading(double lead, double r) {
  require_radius(r, "spherical_from_leading");
  require_leading(lead, r, "spherical_from_leading");
  const double s = std::sqrt(std::max(0.0, 3.0 * (r * r - lead * lead)));
  return {lead, 0.5 * (-lead + s), 0.5 * (-lead - s)};
}

double lemma_f(double x, double r) {
  require_radius(r, "lemma_f");
  require_leading(x, r, "lemma_f");
  const double s = std::sqrt(std::max(0.0, 3.0 * (r * r - x * x)));
  return std::exp(x) + std::exp(0.5 * (-x + s)) + std::exp(0.5 * (-x - s));
}

double lemma_h(double r, double phi) {
  require_radius(r, "lemma_h");
  require_angle(phi, "lemma_h");
  return std::exp(r * std::cos(phi)) + std::exp(r * std::cos(phi + 2.0 * kPi / 3.0)) +
         std::exp(r * std::cos(phi - 2.0 * kPi / 3.0));
}

double lemma_F(double r, double phi) {
  require_radius(r, "lemma_F");
  require_angle(phi, "lemma_F");
  const double sqrt3 = std::numbers::sqrt3;
  return -std::sin(phi) -
         std::exp(-r * sqrt3 * std::sin(phi + kPi / 3.0)) * std::sin(phi + 2.0 * kPi / 3.0) -
         std::exp(r * sqrt3 * std::sin(phi - kPi / 3.0)) * std::sin(phi - 2.0 * kPi / 3.0);
}

double lemma_dh_dr(double r, double phi) {
  require_radius(r, "lemma_dh_dr");
  require_angle(phi, "lemma_dh_dr");
  const double c0 = std::cos(phi);
  const double cp = std::cos(phi + 2.0 * kPi / 3.0);
  const double cm = std::cos(phi - 2.0 * kPi / 3.0);
  return std::exp(r * c0) * c0 + std::exp(r * cp) * cp + std::exp(r * cm) * cm;
}

double chebyshev_exp_identity(double x, double y, double z) {
  const double scale = std::max({std::fabs(x), std::fabs(y), std::fabs(z)});
  if (std::fabs(x + y + z) > 1e-12 * scale)
    throw std::invalid_argument("chebyshev_exp_identity: triple must sum to zero");
  return x * std::exp(x) + y * std::exp(y) + z * std::exp(z);
}

ScaledTuple scale_to_norm(const LogTuple& z, const LogTuple& c) {
  if (z.size() != c.size())
    throw std::invalid_argument("scale_to_norm: length mismatch");
  if (std::fabs(z.sum()) > kMajorizationSumTol || std::fabs(c.sum()) > kMajorizationSumTol)
    throw std::invalid_argument("scale_to_norm: tuples must sum to zero");
  double sz = 0.0, sc = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    sz += z[i] * z[i];
    sc += c[i] * c[i];
  }
  if (sz == 0.0)
    throw std::invalid_argument("scale_to_norm: z is the zero tuple, k undefined");
  if (!(sz < sc))
    throw std::invalid_argument("scale_to_norm: requires sum z^2 < sum c^2");
  const double k = std::sqrt(sc / sz);
  std::vector<double> t(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) t[i] = k * z[i];
  return {LogTuple(std::move(t)), k};
}

Lemma1Equivalence lemma1_equivalence(double a_lead, double x_lead, double r) {
  const auto ta = spherical_from_leading(a_lead, r);
  const auto tx = spherical_from_leading(x_lead, r);
  const double sa = std::exp(ta[0]) + std::exp(ta[1]) + std::exp(ta[2]);
  const double sx = std::exp(tx[0]) + std::exp(tx[1]) + std::exp(tx[2]);
  return {sa <= sx, a_lead <= x_lead, ta[2] <= tx[2]};
}

}  // namespace ssli
