#include "hpq/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hpq::lambert {
namespace {

using Work = long double;

constexpr Work kE2 = std::numbers::e_v<Work> * std::numbers::e_v<Work>;

Work asymptotic_guess(Work z) {
  const Work l1 = std::log(z);
  const Work l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

// z for z < 1, ln z - ln ln z + ln ln z / ln z for z >= e^2, linear in z
// between the two end values.
Work initial_guess(Work z) {
  if (z < 1) return z;
  if (z >= kE2) return asymptotic_guess(z);
  static const Work at_e2 = asymptotic_guess(kE2);
  const Work t = (z - 1) / (kE2 - 1);
  return 1 + t * (at_e2 - 1);
}

// One Halley correction. Below e the residual is w e^w - z; above it the
// logarithmic form w + ln w - ln z avoids overflowing e^w.
Work halley_step(Work w, Work z, Work log_z, bool log_form) {
  if (log_form) {
    const Work f = w + std::log(w) - log_z;
    const Work d1 = (w + 1) / w;
    const Work d2 = -1 / (w * w);
    return f / (d1 - f * d2 / (2 * d1));
  }
  const Work ew = std::exp(w);
  const Work f = w * ew - z;
  const Work d1 = ew * (w + 1);
  return f / (d1 - (w + 2) * f / (2 * (w + 1)));
}

template <std::floating_point T>
void require_domain(T z, const char* what) {
  if (std::isnan(z) || std::isinf(z) || z < 0) {
    throw std::domain_error(std::string(what) + ": argument must be finite and >= 0, got " +
                            std::to_string(static_cast<double>(z)));
  }
}

Work solve(Work z) {
  const bool log_form = z >= std::numbers::e_v<Work>;
  const Work log_z = log_form ? std::log(z) : 0;
  Work w = initial_guess(z);
  constexpr Work eps = std::numeric_limits<Work>::epsilon();
  for (int i = 0; i < kMaxIterations; ++i) {
    const Work step = halley_step(w, z, log_z, log_form);
    w -= step;
    if (std::fabs(step) <= 4 * eps * w) break;
  }
  return w;
}

}  // namespace

template <std::floating_point T>
T w0(T z) {
  require_domain(z, "w0");
  if (z == 0) return T{0};
  return static_cast<T>(solve(static_cast<Work>(z)));
}

template <std::floating_point T>
T w0_prime(T z) {
  if (std::isnan(z) || std::isinf(z) || z <= 0) {
    throw std::domain_error("w0_prime: argument must be finite and > 0, got " +
                            std::to_string(static_cast<double>(z)));
  }
  const Work w = solve(static_cast<Work>(z));
  // W/z = e^{-W}, which keeps huge z from overflowing the denominator.
  return static_cast<T>(std::exp(-w) / (w + 1));
}

template double w0<double>(double);
template long double w0<long double>(long double);
template double w0_prime<double>(double);
template long double w0_prime<long double>(long double);

}  // namespace hpq::lambert
