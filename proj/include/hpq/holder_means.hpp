#pragma once

#include <concepts>

namespace hpq::means {

// Hölder (power) mean of order p of two positive reals:
//   H_p(r, s) = ((r^p + s^p) / 2)^(1/p),  H_0(r, s) = sqrt(r s).
//
// For 0 < |p| < kSmallOrder the mean is evaluated as
// sqrt(rs) * exp(ln cosh(p d) / p), d = ln(r/s) / 2, whose leading term is
// the geometric-limit expansion sqrt(rs) * exp(p ln^2(r/s) / 8); the direct
// power formula loses about eps/|p| relative precision there. Log-sum-exp
// form is used when r^p or s^p would leave the double range.
// The result is clamped to [min(r, s), max(r, s)] and equals r exactly when
// r == s. Throws std::domain_error for non-positive or non-finite r, s and
// for non-finite p.
template <std::floating_point T>
T holder_mean(T p, T r, T s);

// (2 (xy)^{1/4} / (x^{1/4} + y^{1/4}))^4, algebraically equal to H_{-1/4}(x, y).
template <std::floating_point T>
T quartic_harmonic_form(T x, T y);

inline constexpr double kSmallOrder = 1e-3;
inline constexpr double kLogSpaceThreshold = 700.0;

extern template double holder_mean<double>(double, double, double);
extern template long double holder_mean<long double>(long double, long double, long double);
extern template double quartic_harmonic_form<double>(double, double);
extern template long double quartic_harmonic_form<long double>(long double, long double);

}  // namespace hpq::means
