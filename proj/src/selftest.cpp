#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "hpq/cli.hpp"
#include "hpq/fixtures.hpp"
#include "hpq/sampling.hpp"
#include "hpq/verifier.hpp"

namespace hpq::cli {
namespace {

constexpr std::size_t kLemmaGrid = 10'000;

class Tally {
 public:
  explicit Tally(std::ostream& out) : out_(out) {}

  void record(bool ok, const std::string& name, const std::string& detail = {}) {
    ++total_;
    if (!ok) ++failed_;
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out_ << ": " << detail;
    out_ << '\n';
  }

  int finish() {
    out_ << (total_ - failed_) << "/" << total_ << " checks passed\n";
    return failed_ == 0 ? kExitOk : kExitFail;
  }

 private:
  std::ostream& out_;
  int total_ = 0;
  int failed_ = 0;
};

std::string pair_name(const theory::HpqParams& pq) {
  std::ostringstream s;
  s << "(" << pq.p << ", " << pq.q << ")";
  return s.str();
}

}  // namespace

int selftest(const SelftestOptions& options, std::ostream& out) {
  Tally tally(out);

  for (double p : fixtures::kHLemmaOrders) {
    const verify::LemmaCheck c = verify::check_h_lemma(p, kLemmaGrid);
    std::ostringstream name;
    name << "h-lemma p=" << p;
    tally.record(c.pass, name.str(), c.detail);
  }

  for (const auto& pq : fixtures::kGLemmaPairs) {
    const verify::LemmaCheck c = verify::check_g_lemma(pq.p, pq.q, kLemmaGrid);
    tally.record(c.pass, "g-lemma " + pair_name(pq), c.detail);
  }

  for (double p : fixtures::kRegionAxis) {
    for (double q : fixtures::kRegionAxis) {
      const theory::HpqParams pq{p, q};
      const verify::VerificationReport r = verify::verify_region(pq, options.samples, options.seed);
      theory::ConvexityClass expected = r.expected;
      if (options.inject_fault && p == 1.0 && q == 1.0) {
        expected = theory::ConvexityClass::StrictlyConvex;
      }
      std::ostringstream detail;
      detail << "expected " << theory::to_string(expected) << ", +" << r.n_gap_positive << " -"
             << r.n_gap_negative << " of " << r.n_samples;
      tally.record(verify::sign_pattern_matches(r, expected), "region " + pair_name(pq),
                   detail.str());
    }
  }

  for (const auto& pq : fixtures::kNeitherPairs) {
    try {
      const verify::CounterexamplePair pair =
          verify::find_counterexamples(pq, kDefaultBudget, options.seed);
      std::ostringstream detail;
      detail.precision(3);
      detail << "gap +" << static_cast<double>(pair.violates_convexity.gap) << " / "
             << static_cast<double>(pair.violates_concavity.gap);
      tally.record(verify::significantly_positive(pair.violates_convexity) &&
                       verify::significantly_negative(pair.violates_concavity),
                   "counterexample " + pair_name(pq), detail.str());
    } catch (const verify::SearchExhausted& e) {
      tally.record(false, "counterexample " + pair_name(pq), e.what());
    }
  }

  std::uint64_t chain_bad = 0;
  std::uint64_t harmonic_bad = 0;
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const auto [x, y] = sampling::sample_pair(options.seed, i);
    const bool spread = std::fabs(std::log(x / y)) > 1e-2;
    const verify::ChainValues c = verify::check_chain(x, y);
    if (!(spread ? verify::chain_strictly_increasing(c) : verify::chain_non_decreasing(c))) {
      ++chain_bad;
    }
    const verify::ComparisonRecord h = verify::compare_at(-1.0, -1.0, x, y);
    if (spread ? !verify::strictly_less(h.lhs, h.rhs) : h.gap > 0) ++harmonic_bad;
  }
  tally.record(chain_bad == 0, "quartic/geometric/arithmetic chain",
               std::to_string(chain_bad) + " violations");
  tally.record(harmonic_bad == 0, "harmonic inequality",
               std::to_string(harmonic_bad) + " violations");

  return tally.finish();
}

}  // namespace hpq::cli
