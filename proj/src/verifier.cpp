#include "hpq/verifier.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "hpq/holder_means.hpp"
#include "hpq/lambert_w.hpp"
#include "hpq/sampling.hpp"

namespace hpq::verify {

using theory::ConvexityClass;
using theory::HpqParams;

ComparisonRecord compare_at(double p, double q, double x, double y) {
  if (!std::isfinite(p) || !std::isfinite(q)) {
    throw std::domain_error("compare_at: p and q must be finite");
  }
  const Extended xe = x;
  const Extended ye = y;
  const Extended lhs = lambert::w0(means::holder_mean<Extended>(p, xe, ye));
  const Extended rhs =
      means::holder_mean<Extended>(q, lambert::w0(xe), lambert::w0(ye));
  return {x, y, p, q, lhs, rhs, lhs - rhs};
}

Extended significance_scale(const ComparisonRecord& rec) {
  return std::max({std::fabs(rec.lhs), std::fabs(rec.rhs), Extended{1}});
}

bool significantly_positive(const ComparisonRecord& rec) {
  return rec.gap > kSignificance * significance_scale(rec);
}

bool significantly_negative(const ComparisonRecord& rec) {
  return rec.gap < -kSignificance * significance_scale(rec);
}

bool sign_pattern_matches(const VerificationReport& report, ConvexityClass cls) {
  switch (cls) {
    case ConvexityClass::StrictlyConvex:
      return report.n_gap_positive == 0;
    case ConvexityClass::StrictlyConcave:
      return report.n_gap_negative == 0;
    case ConvexityClass::Neither:
      return report.n_gap_positive > 0 && report.n_gap_negative > 0;
  }
  return false;
}

std::string_view to_string(Verdict v) { return v == Verdict::Pass ? "pass" : "fail"; }

bool strictly_less(Extended a, Extended b) {
  return b - a > kStrictRelativeMargin * std::max(std::fabs(a), std::fabs(b));
}

bool chain_strictly_increasing(const ChainValues& c) {
  return strictly_less(c.quartic_harmonic, c.geometric_of_w) &&
         strictly_less(c.geometric_of_w, c.w_of_geometric) &&
         strictly_less(c.w_of_geometric, c.arithmetic_of_w);
}

bool chain_non_decreasing(const ChainValues& c) {
  const auto le = [](Extended a, Extended b) {
    return a <= b + kStrictRelativeMargin * std::max(std::fabs(a), std::fabs(b));
  };
  return le(c.quartic_harmonic, c.geometric_of_w) && le(c.geometric_of_w, c.w_of_geometric) &&
         le(c.w_of_geometric, c.arithmetic_of_w);
}

ChainValues check_chain(double x, double y) {
  const Extended xe = x;
  const Extended ye = y;
  const Extended wx = lambert::w0(xe);
  const Extended wy = lambert::w0(ye);
  return {
      lambert::w0(means::quartic_harmonic_form(xe, ye)),
      means::holder_mean<Extended>(0, wx, wy),
      lambert::w0(means::holder_mean<Extended>(0, xe, ye)),
      means::holder_mean<Extended>(1, wx, wy),
  };
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::StrictlyIncreasing:
      return "strictly increasing";
    case Monotonicity::StrictlyDecreasing:
      return "strictly decreasing";
    case Monotonicity::NonMonotone:
      return "non-monotone";
    case Monotonicity::NotStrict:
      return "not strictly monotone";
  }
  return "not strictly monotone";
}

Monotonicity monotonicity_of(const std::vector<double>& values) {
  if (values.size() < 2) return Monotonicity::NotStrict;
  bool up = false;
  bool down = false;
  bool flat = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double d = values[i] - values[i - 1];
    if (d > 0) {
      up = true;
    } else if (d < 0) {
      down = true;
    } else {
      flat = true;
    }
  }
  if (up && down) return Monotonicity::NonMonotone;
  if (flat) return Monotonicity::NotStrict;
  return up ? Monotonicity::StrictlyIncreasing : Monotonicity::StrictlyDecreasing;
}

std::vector<double> lemma_grid(std::size_t grid_size) {
  if (grid_size < 3) throw std::invalid_argument("lemma grid needs at least 3 points");
  std::vector<double> grid(grid_size);
  const double span = kLemmaGridLog10Max - kLemmaGridLog10Min;
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid_size - 1);
    grid[i] = std::pow(10.0, kLemmaGridLog10Min + span * t);
  }
  return grid;
}

namespace {

template <typename F>
std::vector<double> evaluate_on(const std::vector<double>& grid, F&& f) {
  std::vector<double> values(grid.size());
  const auto n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) values[i] = f(grid[i]);
  return values;
}

}  // namespace

LemmaCheck check_h_lemma(double p, std::size_t grid_size) {
  const std::vector<double> grid = lemma_grid(grid_size);
  const std::vector<double> offsets =
      evaluate_on(grid, [p](double r) { return theory::h_p_offset(p, r); });

  LemmaCheck out;
  out.observed = monotonicity_of(offsets);
  const auto top = std::max_element(offsets.begin(), offsets.end());
  out.grid_max = p + *top;
  out.grid_argmax = grid[static_cast<std::size_t>(top - offsets.begin())];

  std::ostringstream detail;
  if (p >= 0) {
    out.expected = Monotonicity::StrictlyIncreasing;
    out.pass = out.observed == out.expected;
  } else if (p <= -1) {
    out.expected = Monotonicity::StrictlyDecreasing;
    out.pass = out.observed == out.expected;
  } else {
    out.expected = Monotonicity::NonMonotone;
    out.bound = theory::c_of_p(p);
    out.pass = out.observed == out.expected && out.grid_max <= *out.bound + kHMaxSlack;
    detail.precision(17);
    detail << "C(p)=" << *out.bound << " ";
  }
  detail.precision(17);
  detail << "h_p " << to_string(out.observed) << " (expected " << to_string(out.expected)
         << "), grid max " << out.grid_max << " at r=" << out.grid_argmax;
  out.detail = detail.str();
  return out;
}

Monotonicity expected_g_monotonicity(double p, double q) {
  if (!std::isfinite(p) || !std::isfinite(q)) {
    throw std::domain_error("expected_g_monotonicity: p and q must be finite");
  }
  if (p > 0) return q <= p ? Monotonicity::StrictlyDecreasing : Monotonicity::NonMonotone;
  if (p == 0) {
    if (q >= 1) return Monotonicity::StrictlyIncreasing;
    if (q <= 0) return Monotonicity::StrictlyDecreasing;
    return Monotonicity::NonMonotone;
  }
  if (p <= -1) return q >= p ? Monotonicity::StrictlyIncreasing : Monotonicity::NonMonotone;
  return q >= theory::c_of_p(p) ? Monotonicity::StrictlyIncreasing : Monotonicity::NonMonotone;
}

LemmaCheck check_g_lemma(double p, double q, std::size_t grid_size) {
  const std::vector<double> grid = lemma_grid(grid_size);
  const std::vector<double> logs =
      evaluate_on(grid, [p, q](double r) { return theory::log_g_pq(p, q, r); });

  LemmaCheck out;
  out.expected = expected_g_monotonicity(p, q);
  out.observed = monotonicity_of(logs);
  const auto top = std::max_element(logs.begin(), logs.end());
  out.grid_max = *top;
  out.grid_argmax = grid[static_cast<std::size_t>(top - logs.begin())];
  out.pass = out.observed == out.expected;

  std::ostringstream detail;
  detail << "g_{" << p << "," << q << "} " << to_string(out.observed) << " (expected "
         << to_string(out.expected) << ")";
  out.detail = detail.str();
  return out;
}

double golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                               int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2;
}

namespace detail {

ComparisonRecord evaluate_sample(const HpqParams& params, std::uint64_t seed,
                                 std::uint64_t index) {
  const auto [x, y] = sampling::sample_pair(seed, index);
  return compare_at(params.p, params.q, x, y);
}

Extended normalized_gap(const ComparisonRecord& rec) { return rec.gap / significance_scale(rec); }

void RegionTally::add(std::uint64_t index, const ComparisonRecord& rec) {
  ++n_;
  if (significantly_positive(rec)) ++positive_;
  if (significantly_negative(rec)) ++negative_;
  max_abs_gap_ = std::max(max_abs_gap_, std::fabs(rec.gap));

  const Extended g = normalized_gap(rec);
  Extended badness = std::fabs(g);
  if (expected_ == ConvexityClass::StrictlyConvex) badness = g;
  if (expected_ == ConvexityClass::StrictlyConcave) badness = -g;
  worst_.push_back({badness, index, rec});
  if (worst_.size() >= 8 * kMaxWorstRecords) trim();
}

void RegionTally::trim() {
  std::sort(worst_.begin(), worst_.end(), [](const Ranked& a, const Ranked& b) {
    if (a.badness != b.badness) return a.badness > b.badness;
    return a.index < b.index;
  });
  if (worst_.size() > kMaxWorstRecords) worst_.resize(kMaxWorstRecords);
}

void RegionTally::merge(const RegionTally& other) {
  n_ += other.n_;
  positive_ += other.positive_;
  negative_ += other.negative_;
  max_abs_gap_ = std::max(max_abs_gap_, other.max_abs_gap_);
  worst_.insert(worst_.end(), other.worst_.begin(), other.worst_.end());
  trim();
}

VerificationReport RegionTally::finish(const HpqParams& params, std::uint64_t seed) const {
  RegionTally sorted = *this;
  sorted.trim();

  VerificationReport report;
  report.params = params;
  report.expected = expected_;
  report.n_samples = n_;
  report.n_gap_positive = positive_;
  report.n_gap_negative = negative_;
  report.max_abs_gap = max_abs_gap_;
  report.seed = seed;
  for (const Ranked& r : sorted.worst_) report.worst_records.push_back(r.rec);

  const bool ok = sign_pattern_matches(report, expected_);
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

void ExtremeScan::add(std::uint64_t index, const ComparisonRecord& rec) {
  if (significantly_positive(rec)) {
    if (!best_positive || normalized_gap(rec) > normalized_gap(*best_positive) ||
        (normalized_gap(rec) == normalized_gap(*best_positive) && index < positive_index)) {
      best_positive = rec;
      positive_index = index;
    }
  } else if (significantly_negative(rec)) {
    if (!best_negative || normalized_gap(rec) < normalized_gap(*best_negative) ||
        (normalized_gap(rec) == normalized_gap(*best_negative) && index < negative_index)) {
      best_negative = rec;
      negative_index = index;
    }
  }
}

void ExtremeScan::merge(const ExtremeScan& other) {
  if (other.best_positive) add(other.positive_index, *other.best_positive);
  if (other.best_negative) add(other.negative_index, *other.best_negative);
}

void require_neither(const HpqParams& params, std::uint64_t budget) {
  if (budget < 1) throw std::invalid_argument("find_counterexamples: budget must be >= 1");
  if (theory::classify(params) != ConvexityClass::Neither) {
    throw std::domain_error("find_counterexamples: (p, q) lies in a convex or concave region");
  }
}

namespace {

// Coordinate-wise golden-section polish in log10 space, accepting a move
// only if it increases sign * normalized gap.
ComparisonRecord refine(const ComparisonRecord& start, int sign) {
  const double p = start.p;
  const double q = start.q;
  const auto score = [&](double ux, double uy) {
    const ComparisonRecord rec = compare_at(p, q, std::pow(10.0, ux), std::pow(10.0, uy));
    return static_cast<double>(sign * normalized_gap(rec));
  };

  ComparisonRecord best = start;
  double ux = std::log10(start.x);
  double uy = std::log10(start.y);
  double best_score = static_cast<double>(sign * normalized_gap(best));

  for (int axis = 0; axis < 2; ++axis) {
    const double u = axis == 0 ? ux : uy;
    const double lo = std::max(sampling::kLog10Min, u - 0.5);
    const double hi = std::min(sampling::kLog10Max, u + 0.5);
    const auto along = [&](double v) { return axis == 0 ? score(v, uy) : score(ux, v); };
    const double v = golden_section_maximize(along, lo, hi, kGoldenIterations);
    const double nx = axis == 0 ? v : ux;
    const double ny = axis == 0 ? uy : v;
    const ComparisonRecord cand = compare_at(p, q, std::pow(10.0, nx), std::pow(10.0, ny));
    const double s = static_cast<double>(sign * normalized_gap(cand));
    if (s > best_score) {
      best = cand;
      best_score = s;
      ux = nx;
      uy = ny;
    }
  }
  return best;
}

}  // namespace

CounterexamplePair polish(const ExtremeScan& scan) {
  if (!scan.best_positive || !scan.best_negative) {
    std::string missing = !scan.best_positive ? "convexity" : "concavity";
    throw SearchExhausted("find_counterexamples: no significant " + missing +
                          " violation within budget");
  }
  return {refine(*scan.best_positive, +1), refine(*scan.best_negative, -1)};
}

}  // namespace detail

VerificationReport verify_region(const HpqParams& params, std::uint64_t n_samples,
                                 std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("verify_region: n_samples must be >= 1");
  const ConvexityClass expected = theory::classify(params);

  detail::RegionTally total(expected);
  const auto n = static_cast<std::int64_t>(n_samples);
#pragma omp parallel
  {
    detail::RegionTally local(expected);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      local.add(idx, detail::evaluate_sample(params, seed, idx));
    }
#pragma omp critical(hpq_region_merge)
    total.merge(local);
  }
  return total.finish(params, seed);
}

CounterexamplePair find_counterexamples(const HpqParams& params, std::uint64_t budget,
                                        std::uint64_t seed) {
  detail::require_neither(params, budget);
  detail::ExtremeScan total;
  const auto n = static_cast<std::int64_t>(budget);
#pragma omp parallel
  {
    detail::ExtremeScan local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      local.add(idx, detail::evaluate_sample(params, seed, idx));
    }
#pragma omp critical(hpq_extreme_merge)
    total.merge(local);
  }
  return detail::polish(total);
}

}  // namespace hpq::verify
