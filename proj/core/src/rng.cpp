#include "ssli/rng.hpp"

#include <cmath>
#include <numbers>

namespace ssli {

double SplitMix64::next_gaussian() {
  // Box-Muller, cosine branch only. u1 is mapped into (0, 1] so the log is
  // always finite.
  double u1 = 1.0 - next_unit();
  double u2 = next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // One splitmix64 scramble of the combined words; avalanches both inputs.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ssli
