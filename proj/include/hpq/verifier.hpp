#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hpq/hpq_theory.hpp"

namespace hpq::verify {

// Comparisons run in extended precision: near the origin the true gap of
// the harmonic-mean inequality is ~1e-17 relative, below double resolution.
using Extended = long double;

// One evaluation of W(H_p(x, y)) against H_q(W(x), W(y)); gap = lhs - rhs.
struct ComparisonRecord {
  double x = 0.0;
  double y = 0.0;
  double p = 0.0;
  double q = 0.0;
  Extended lhs = 0.0L;
  Extended rhs = 0.0L;
  Extended gap = 0.0L;

  friend bool operator==(const ComparisonRecord&, const ComparisonRecord&) = default;
};

ComparisonRecord compare_at(double p, double q, double x, double y);

// Gaps within 1e-12 * max(|lhs|, |rhs|, 1) of zero count as ties.
inline constexpr double kSignificance = 1e-12;
Extended significance_scale(const ComparisonRecord& rec);
bool significantly_positive(const ComparisonRecord& rec);
bool significantly_negative(const ComparisonRecord& rec);

enum class Verdict { Pass, Fail };
std::string_view to_string(Verdict v);

inline constexpr std::size_t kMaxWorstRecords = 10;

struct VerificationReport {
  theory::HpqParams params;
  theory::ConvexityClass expected = theory::ConvexityClass::Neither;
  std::uint64_t n_samples = 0;
  std::uint64_t n_gap_positive = 0;
  std::uint64_t n_gap_negative = 0;
  Extended max_abs_gap = 0.0L;
  // Largest violations of the expected relation, most severe first.
  std::vector<ComparisonRecord> worst_records;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Fail;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Whether the report's significant-gap counts fit `cls`: convex allows no
// positive gaps, concave no negative gaps, neither needs both signs.
bool sign_pattern_matches(const VerificationReport& report, theory::ConvexityClass cls);

// Randomised check of one (p, q) point against classify(). Pairs are drawn
// log-uniformly from the sampling box (see sampling.hpp); sample i depends
// only on (seed, i). OpenMP-parallel; the result is identical to
// reference::verify_region for any thread count.
VerificationReport verify_region(const theory::HpqParams& params, std::uint64_t n_samples,
                                 std::uint64_t seed);

struct CounterexamplePair {
  ComparisonRecord violates_convexity;  // gap > threshold
  ComparisonRecord violates_concavity;  // gap < -threshold
};

class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kGoldenIterations = 20;

// Witnesses for both failure directions in a Neither region: random search
// over `budget` pairs, then per-coordinate golden-section polish of each
// witness in log space. Throws std::domain_error if classify(params) is not
// Neither and SearchExhausted if a direction is never found.
CounterexamplePair find_counterexamples(const theory::HpqParams& params, std::uint64_t budget,
                                        std::uint64_t seed);

// The four members of W(H_{-1/4}(x,y)) <= sqrt(W(x)W(y)) <= W(sqrt(xy))
// <= (W(x) + W(y))/2.
struct ChainValues {
  Extended quartic_harmonic;
  Extended geometric_of_w;
  Extended w_of_geometric;
  Extended arithmetic_of_w;
};

ChainValues check_chain(double x, double y);

// Rounding floor for strict comparisons of extended-precision values.
inline constexpr Extended kStrictRelativeMargin = 32 * std::numeric_limits<Extended>::epsilon();

// a < b beyond kStrictRelativeMargin * max(|a|, |b|).
bool strictly_less(Extended a, Extended b);
bool chain_strictly_increasing(const ChainValues& c);
bool chain_non_decreasing(const ChainValues& c);

enum class Monotonicity { StrictlyIncreasing, StrictlyDecreasing, NonMonotone, NotStrict };
std::string_view to_string(Monotonicity m);

Monotonicity monotonicity_of(const std::vector<double>& values);

// r_i = 10^(-9 + 18 i / (n - 1)), i = 0..n-1.
std::vector<double> lemma_grid(std::size_t grid_size);
inline constexpr double kLemmaGridLog10Min = -9.0;
inline constexpr double kLemmaGridLog10Max = 9.0;

struct LemmaCheck {
  bool pass = false;
  Monotonicity expected = Monotonicity::NotStrict;
  Monotonicity observed = Monotonicity::NotStrict;
  double grid_max = 0.0;     // of h_p, or of ln g_{p,q}
  double grid_argmax = 0.0;  // grid point attaining grid_max
  std::optional<double> bound;  // C(p) for the interior-maximum case
  std::string detail;
};

// h_p on the lemma grid: increasing for p >= 0, decreasing for p <= -1,
// otherwise non-monotone with max <= C(p) + 1e-8.
LemmaCheck check_h_lemma(double p, std::size_t grid_size);
inline constexpr double kHMaxSlack = 1e-8;

// ln g_{p,q} on the lemma grid against the clause selected by (p, q).
LemmaCheck check_g_lemma(double p, double q, std::size_t grid_size);
Monotonicity expected_g_monotonicity(double p, double q);

// Golden-section maximisation of f on [a, b]; returns the final midpoint.
double golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                               int iterations);

namespace reference {

// Single-threaded versions of the sampling kernels, kept as the oracle for
// the parallel paths.
VerificationReport verify_region(const theory::HpqParams& params, std::uint64_t n_samples,
                                 std::uint64_t seed);
CounterexamplePair find_counterexamples(const theory::HpqParams& params, std::uint64_t budget,
                                        std::uint64_t seed);

}  // namespace reference

namespace detail {

// Per-sample evaluation shared by the serial and parallel kernels.
ComparisonRecord evaluate_sample(const theory::HpqParams& params, std::uint64_t seed,
                                 std::uint64_t index);

// Running tally of a region check. merge() is associative and commutative;
// ties in the worst-record ranking break on sample index.
class RegionTally {
 public:
  explicit RegionTally(theory::ConvexityClass expected) : expected_(expected) {}
  void add(std::uint64_t index, const ComparisonRecord& rec);
  void merge(const RegionTally& other);
  VerificationReport finish(const theory::HpqParams& params, std::uint64_t seed) const;

 private:
  struct Ranked {
    Extended badness;
    std::uint64_t index;
    ComparisonRecord rec;
  };
  void trim();

  theory::ConvexityClass expected_;
  std::uint64_t n_ = 0;
  std::uint64_t positive_ = 0;
  std::uint64_t negative_ = 0;
  Extended max_abs_gap_ = 0.0L;
  std::vector<Ranked> worst_;
};

// Most extreme significant record in each direction; also mergeable.
struct ExtremeScan {
  std::optional<ComparisonRecord> best_positive;
  std::optional<ComparisonRecord> best_negative;
  std::uint64_t positive_index = 0;
  std::uint64_t negative_index = 0;

  void add(std::uint64_t index, const ComparisonRecord& rec);
  void merge(const ExtremeScan& other);
};

// gap / significance_scale, the quantity the polish step maximises.
Extended normalized_gap(const ComparisonRecord& rec);

void require_neither(const theory::HpqParams& params, std::uint64_t budget);
CounterexamplePair polish(const ExtremeScan& scan);

}  // namespace detail

}  // namespace hpq::verify
