#include "hpq/holder_means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hpq::means {
namespace {

template <std::floating_point T>
void require_positive(T v, const char* what) {
  if (!(v > 0) || std::isinf(v)) {
    throw std::domain_error(std::string(what) + ": arguments must be positive and finite, got " +
                            std::to_string(static_cast<double>(v)));
  }
}

template <std::floating_point T>
T geometric(T r, T s) {
  const T prod = r * s;
  if (std::isfinite(prod) && prod >= std::numeric_limits<T>::min()) return std::sqrt(prod);
  return std::sqrt(r) * std::sqrt(s);
}

// ln cosh(x), accurate near 0 and free of overflow for large |x|.
template <std::floating_point T>
T log_cosh(T x) {
  const T ax = std::fabs(x);
  if (ax < 1) {
    const T sh = std::sinh(x / 2);
    return std::log1p(2 * sh * sh);
  }
  return ax + std::log1p(std::exp(-2 * ax)) - std::numbers::ln2_v<T>;
}

}  // namespace

template <std::floating_point T>
T holder_mean(T p, T r, T s) {
  if (!std::isfinite(p)) throw std::domain_error("holder_mean: order p must be finite");
  require_positive(r, "holder_mean");
  require_positive(s, "holder_mean");
  if (r == s) return r;

  const T lo = std::min(r, s);
  const T hi = std::max(r, s);
  const T log_r = std::log(r);
  const T log_s = std::log(s);

  T result;
  if (p == 0) {
    result = geometric(r, s);
  } else if (std::fabs(p) < static_cast<T>(kSmallOrder)) {
    // ln H_p = ln sqrt(rs) + ln cosh(p d) / p with d = (ln r - ln s) / 2;
    // to second order this is sqrt(rs) exp(p (ln r - ln s)^2 / 8).
    const T d = (log_r - log_s) / 2;
    result = geometric(r, s) * std::exp(log_cosh(p * d) / p);
  } else if (std::fabs(p) * std::max(std::fabs(log_r), std::fabs(log_s)) >
             static_cast<T>(kLogSpaceThreshold)) {
    const T a = p * log_r;
    const T b = p * log_s;
    const T m = std::max(a, b);
    const T lse = m + std::log1p(std::exp(-std::fabs(a - b)));
    result = std::exp((lse - std::numbers::ln2_v<T>) / p);
  } else {
    result = std::pow((std::pow(r, p) + std::pow(s, p)) / 2, 1 / p);
  }
  return std::clamp(result, lo, hi);
}

template <std::floating_point T>
T quartic_harmonic_form(T x, T y) {
  require_positive(x, "quartic_harmonic_form");
  require_positive(y, "quartic_harmonic_form");
  const T qx = std::sqrt(std::sqrt(x));
  const T qy = std::sqrt(std::sqrt(y));
  const T h = 2 * qx * qy / (qx + qy);
  const T h2 = h * h;
  return h2 * h2;
}

template double holder_mean<double>(double, double, double);
template long double holder_mean<long double>(long double, long double, long double);
template double quartic_harmonic_form<double>(double, double);
template long double quartic_harmonic_form<long double>(long double, long double);

}  // namespace hpq::means
