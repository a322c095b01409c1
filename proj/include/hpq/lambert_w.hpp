#pragma once

#include <concepts>

namespace hpq::lambert {

// Principal branch W0 of the Lambert W function on [0, +inf).
//
// The iteration always runs in long double; the double overload is the
// rounded extended result, so its residual |w*e^w - z| stays within
// kResidualTolerance * max(z, 1) over the tested range [1e-9, 1e9].
//
// Throws std::domain_error for negative, NaN or infinite input.
template <std::floating_point T>
T w0(T z);

// W0'(z) = W(z) / (z (W(z) + 1)). Throws std::domain_error for z <= 0.
template <std::floating_point T>
T w0_prime(T z);

inline constexpr double kResidualTolerance = 2e-15;
inline constexpr int kMaxIterations = 30;

extern template double w0<double>(double);
extern template long double w0<long double>(long double);
extern template double w0_prime<double>(double);
extern template long double w0_prime<long double>(long double);

}  // namespace hpq::lambert
