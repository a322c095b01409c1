#include "hpq/verifier.hpp"

namespace hpq::verify::reference {

VerificationReport verify_region(const theory::HpqParams& params, std::uint64_t n_samples,
                                 std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("verify_region: n_samples must be >= 1");
  detail::RegionTally tally(theory::classify(params));
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    tally.add(i, detail::evaluate_sample(params, seed, i));
  }
  return tally.finish(params, seed);
}

CounterexamplePair find_counterexamples(const theory::HpqParams& params, std::uint64_t budget,
                                        std::uint64_t seed) {
  detail::require_neither(params, budget);
  detail::ExtremeScan scan;
  for (std::uint64_t i = 0; i < budget; ++i) {
    scan.add(i, detail::evaluate_sample(params, seed, i));
  }
  return detail::polish(scan);
}

}  // namespace hpq::verify::reference
