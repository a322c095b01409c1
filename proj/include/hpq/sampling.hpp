#pragma once

#include <cstdint>

namespace hpq::sampling {

// Counter-based SplitMix64: the n-th output of the SplitMix64 stream seeded
// with `seed`. Any sample can be drawn independently of the others, so a
// parallel partition of the index space reproduces the serial stream.
constexpr std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1) from the top 53 bits.
constexpr double unit_uniform(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(splitmix64(seed, counter) >> 11) * 0x1.0p-53;
}

// Sampling box for verification pairs, as decimal exponents.
inline constexpr double kLog10Min = -6.0;
inline constexpr double kLog10Max = 30.0;

double log_uniform(std::uint64_t seed, std::uint64_t counter, double log10_min = kLog10Min,
                   double log10_max = kLog10Max);

struct SamplePair {
  double x;
  double y;
};

// Pair i uses counters 2i and 2i + 1.
SamplePair sample_pair(std::uint64_t seed, std::uint64_t index);

}  // namespace hpq::sampling
