#include "hpq/sampling.hpp"

#include <cmath>

namespace hpq::sampling {

double log_uniform(std::uint64_t seed, std::uint64_t counter, double log10_min, double log10_max) {
  const double u = unit_uniform(seed, counter);
  return std::pow(10.0, log10_min + (log10_max - log10_min) * u);
}

SamplePair sample_pair(std::uint64_t seed, std::uint64_t index) {
  return {log_uniform(seed, 2 * index), log_uniform(seed, 2 * index + 1)};
}

}  // namespace hpq::sampling
