#pragma once

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace hpq::cli {

// Exit codes: 0 success/pass, 1 verification failure, 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSamples = 10'000;
inline constexpr std::uint64_t kDefaultBudget = 100'000;
inline constexpr std::uint64_t kDefaultSeed = 42;

// Dispatches one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

struct SelftestOptions {
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  // Flips the expected class of (1, 1) so the harness must report a failure.
  bool inject_fault = false;
};

// Lemma checks, the region grid, the neither-region counterexamples and the
// inequality chains. Prints one line per check; returns kExitOk iff all pass.
int selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace hpq::cli
