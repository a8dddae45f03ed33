#pragma once

#include <cstdint>

namespace ssli {

/// Deterministic 64-bit generator (splitmix64). Chosen over std::mt19937 +
/// std::normal_distribution because the standard distributions are not
/// bit-reproducible across library implementations; campaign results must be.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; consumes two uniforms per value.
  double next_gaussian();

 private:
  std::uint64_t state_;
};

/// Derives an independent stream seed; used to give every campaign trial its
/// own generator so any sharding of the trial range recombines exactly.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace ssli
