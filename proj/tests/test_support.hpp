// Deterministic random generators shared by the test suites.
#pragma once

#include <cmath>
#include <vector>

#include "ssli/matrix.hpp"
#include "ssli/rng.hpp"
#include "ssli/tuple.hpp"

namespace support {

inline ssli::PositiveTuple random_positive_tuple(ssli::SplitMix64& rng, std::size_t n,
                                                 double spread) {
  std::vector<double> v(n);
  for (auto& x : v) x = std::exp(spread * rng.next_gaussian());
  return ssli::PositiveTuple(std::move(v));
}

/// Positive n-tuple with product exactly shifted to 1.
inline ssli::PositiveTuple random_unit_product_tuple(ssli::SplitMix64& rng, std::size_t n,
                                                     double spread) {
  std::vector<double> logs(n);
  double mean = 0.0;
  for (auto& l : logs) {
    l = spread * rng.next_gaussian();
    mean += l;
  }
  mean /= static_cast<double>(n);
  for (auto& l : logs) l = std::exp(l - mean);
  return ssli::PositiveTuple(std::move(logs));
}

/// Sum-zero log triple.
inline ssli::LogTuple random_sum_zero_triple(ssli::SplitMix64& rng, double spread) {
  std::vector<double> v(3);
  double mean = 0.0;
  for (auto& x : v) {
    x = spread * rng.next_gaussian();
    mean += x;
  }
  mean /= 3.0;
  for (auto& x : v) x -= mean;
  return ssli::LogTuple(std::move(v));
}

inline ssli::Mat random_rotation(ssli::SplitMix64& rng) {
  return ssli::rotation_from_quaternion(rng.next_gaussian(), rng.next_gaussian(),
                                        rng.next_gaussian(), rng.next_gaussian());
}

/// SPD matrix with log-eigenvalues uniform in [lo, hi], random orientation.
inline ssli::SymMat random_spd(ssli::SplitMix64& rng, double lo, double hi) {
  std::vector<double> lam(3);
  for (auto& l : lam) l = std::exp(lo + (hi - lo) * rng.next_unit());
  const ssli::Mat r = random_rotation(rng);
  return ssli::sym_part(r * ssli::SymMat::diagonal(lam).full() * r.transpose());
}

/// Invertible matrix with positive determinant and condition <= cond_max.
inline ssli::Mat random_posdet(ssli::SplitMix64& rng, double cond_max) {
  const double half_width = 0.5 * std::log(cond_max);
  std::vector<double> sigma(3);
  for (auto& s : sigma) s = std::exp((2.0 * rng.next_unit() - 1.0) * half_width);
  return random_rotation(rng) * ssli::SymMat::diagonal(sigma).full() *
         random_rotation(rng).transpose();
}

}  // namespace support
