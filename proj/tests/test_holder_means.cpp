#include "hpq/holder_means.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "oracles.hpp"

namespace hpq::means {
namespace {

TEST(HolderMean, ClassicalOrders) {
  EXPECT_DOUBLE_EQ(holder_mean(1.0, 2.0, 4.0), 3.0);
  EXPECT_DOUBLE_EQ(holder_mean(0.0, 2.0, 8.0), 4.0);
  EXPECT_DOUBLE_EQ(holder_mean(-1.0, 2.0, 6.0), 3.0);
}

TEST(HolderMean, SpecialOrdersMatchClosedForms) {
  oracle::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const double r = rng.log_uniform(1e-8, 1e8);
    const double s = rng.log_uniform(1e-8, 1e8);
    EXPECT_NEAR(holder_mean(1.0, r, s), (r + s) / 2, 1e-14 * (r + s) / 2);
    const double harmonic = 2 * r * s / (r + s);
    EXPECT_NEAR(holder_mean(-1.0, r, s), harmonic, 1e-14 * harmonic);
    const double geometric = std::sqrt(r * s);
    EXPECT_NEAR(holder_mean(0.0, r, s), geometric, 1e-14 * geometric);
  }
}

TEST(HolderMean, IdempotentSymmetricAndBetween) {
  oracle::Rng rng(11);
  for (int i = 0; i < 5000; ++i) {
    const double p = rng.uniform(-6.0, 6.0);
    const double r = rng.log_uniform(1e-12, 1e12);
    const double s = rng.log_uniform(1e-12, 1e12);
    ASSERT_EQ(holder_mean(p, r, r), r);
    const double m = holder_mean(p, r, s);
    ASSERT_EQ(m, holder_mean(p, s, r)) << "p=" << p;
    ASSERT_GT(m, std::min(r, s)) << "p=" << p << " r=" << r << " s=" << s;
    ASSERT_LT(m, std::max(r, s)) << "p=" << p << " r=" << r << " s=" << s;
  }
}

TEST(HolderMean, StrictlyIncreasingInOrder) {
  oracle::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const double r = rng.log_uniform(1e-3, 1e3);
    const double s = rng.log_uniform(1e-3, 1e3);
    if (r == s) continue;
    double prev = 0.0;
    for (int k = 0; k <= 32; ++k) {
      const double p = -4.0 + 0.25 * k;
      const double m = holder_mean(p, r, s);
      ASSERT_GT(m, prev) << "p=" << p << " r=" << r << " s=" << s;
      prev = m;
    }
  }
}

TEST(HolderMean, ContinuousAtGeometricLimit) {
  oracle::Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const double r = rng.log_uniform(0.1, 10.0);
    const double s = rng.log_uniform(0.1, 10.0);
    const double g = holder_mean(0.0, r, s);
    const double d = std::log(r / s);
    for (double p : {1e-4, -1e-4, 3e-6, -7e-8, 1e-9, -1e-12}) {
      const double approx = g * std::exp(p * d * d / 8);
      ASSERT_NEAR(holder_mean(p, r, s), approx, 1e-10 * g) << "p=" << p;
    }
  }
}

TEST(HolderMean, SmallOrderMatchesExtendedDirectFormula) {
  // Direct evaluation in long double still has ~8 digits at |p| = 1e-10.
  const long double direct = oracle::holder_mean_direct(1e-10L, 2.0L, 9.0L);
  EXPECT_NEAR(holder_mean(1e-10, 2.0, 9.0), static_cast<double>(direct), 1e-8);
}

TEST(HolderMean, LogSpaceGuardAvoidsOverflow) {
  const double m1 = holder_mean(5.0, 1e300, 1e290);
  EXPECT_TRUE(std::isfinite(m1));
  EXPECT_NEAR(m1 / 1e300, std::pow(0.5, 0.2), 1e-12);
  const double m2 = holder_mean(-3.0, 1e-300, 1.0);
  EXPECT_NEAR(m2 / 1e-300, std::cbrt(2.0), 1e-12);
  const double m3 = holder_mean(800.0, 2.0, 3.0);
  EXPECT_GT(m3, 2.99);
  EXPECT_LE(m3, 3.0);
  const double m4 = holder_mean(-800.0, 2.0, 3.0);
  EXPECT_GE(m4, 2.0);
  EXPECT_LT(m4, 2.01);
}

TEST(HolderMean, AgreesWithExtendedDirectFormula) {
  oracle::Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    const double p = rng.uniform(-4.0, 4.0);
    const double r = rng.log_uniform(1e-6, 1e6);
    const double s = rng.log_uniform(1e-6, 1e6);
    const long double ref = oracle::holder_mean_direct(p, r, s);
    ASSERT_NEAR(holder_mean(p, r, s), static_cast<double>(ref), 1e-12 * static_cast<double>(ref))
        << "p=" << p;
  }
}

TEST(HolderMean, DomainErrors) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(holder_mean(1.0, 0.0, 1.0), std::domain_error);
  EXPECT_THROW(holder_mean(1.0, 1.0, -2.0), std::domain_error);
  EXPECT_THROW(holder_mean(1.0, nan, 1.0), std::domain_error);
  EXPECT_THROW(holder_mean(1.0, 1.0, inf), std::domain_error);
  EXPECT_THROW(holder_mean(nan, 1.0, 2.0), std::domain_error);
  EXPECT_THROW(holder_mean(inf, 1.0, 2.0), std::domain_error);
  EXPECT_THROW(holder_mean(-inf, 1.0, 2.0), std::domain_error);
  EXPECT_THROW(quartic_harmonic_form(0.0, 1.0), std::domain_error);
}

TEST(QuarticHarmonicForm, Examples) {
  EXPECT_DOUBLE_EQ(quartic_harmonic_form(1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(quartic_harmonic_form(16.0, 16.0), 16.0);
  // x = 1, y = 16: fourth roots 1 and 2, so (2*2/3)^4 = (4/3)^4.
  EXPECT_NEAR(quartic_harmonic_form(1.0, 16.0), 256.0 / 81.0, 1e-15);
  EXPECT_NEAR(quartic_harmonic_form(1.0, 16.0), 3.16049, 1e-5);
}

TEST(QuarticHarmonicForm, EqualsOrderMinusQuarterMean) {
  oracle::Rng rng(23);
  for (int i = 0; i < 5000; ++i) {
    const double x = rng.log_uniform(1e-9, 1e9);
    const double y = rng.log_uniform(1e-9, 1e9);
    const double m = holder_mean(-0.25, x, y);
    ASSERT_NEAR(quartic_harmonic_form(x, y), m, 1e-13 * m);
  }
}

}  // namespace
}  // namespace hpq::means
