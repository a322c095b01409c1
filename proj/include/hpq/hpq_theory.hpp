#pragma once

#include <string_view>

namespace hpq::theory {

// A point (p, q) of the classification plane. Both orders must be finite.
struct HpqParams {
  double p = 0.0;
  double q = 0.0;

  friend bool operator==(const HpqParams&, const HpqParams&) = default;
};

enum class ConvexityClass { StrictlyConvex, StrictlyConcave, Neither };

// "convex", "concave" or "neither".
std::string_view to_string(ConvexityClass c);
ConvexityClass convexity_from_string(std::string_view s);

// h_p(r) = p (W(r) + 1) + W(r) / (W(r) + 1).
double h_p(double p, double r);

// h_p(r) - p, evaluated as (p + 1) W - W^2 / (W + 1). Same monotonicity as
// h_p but keeps full relative precision as r -> 0+, where h_p itself
// flattens against p.
double h_p_offset(double p, double r);

// f1(r) = -1 / (W(r) + 1)^2, in (-1, 0).
double f1(double r);

// g_{p,q}(r) = W(r)^q / (r^p (W(r) + 1)). Throws std::range_error when the
// value leaves the positive finite double range.
double g_pq(double p, double q, double r);

// ln g_{p,q}(r) = (q - p) ln W - p W - ln(1 + W), using ln r = ln W + W.
double log_g_pq(double p, double q, double r);

// C(p) = 1 - 2 sqrt(-p) on [-1, 0].
double c_of_p(double p);

// Maximiser of h_p on (0, inf) for p in (-1, 0): W(r*) + 1 = 1/sqrt(-p),
// so r* = (z - 1) e^{z - 1} with z = 1/sqrt(-p).
double h_p_argmax(double p);

// Verdict of the (p, q) classification: strictly convex on D1 u D2,
// strictly concave on D3, neither elsewhere.
ConvexityClass classify(const HpqParams& params);

bool in_d1(const HpqParams& params);
bool in_d2(const HpqParams& params);
bool in_d3(const HpqParams& params);

}  // namespace hpq::theory
