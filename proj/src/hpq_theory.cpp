#include "hpq/hpq_theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hpq/lambert_w.hpp"

namespace hpq::theory {
namespace {

void require_positive(double r, const char* what) {
  if (!(r > 0) || std::isinf(r)) {
    throw std::domain_error(std::string(what) + ": r must be positive and finite, got " +
                            std::to_string(r));
  }
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::domain_error(std::string(what) + ": order must be finite");
}

// w - ln(1 + w) without cancellation for small w.
double w_minus_log1p(double w) {
  if (w < 1e-3) {
    // w^2/2 - w^3/3 + w^4/4 - ...; eight terms reach double precision here.
    double term = w;
    double sum = 0.0;
    for (int k = 2; k <= 9; ++k) {
      term *= -w;
      sum -= term / k;
    }
    return sum;
  }
  return w - std::log1p(w);
}

}  // namespace

std::string_view to_string(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::StrictlyConvex:
      return "convex";
    case ConvexityClass::StrictlyConcave:
      return "concave";
    case ConvexityClass::Neither:
      return "neither";
  }
  return "neither";
}

ConvexityClass convexity_from_string(std::string_view s) {
  if (s == "convex") return ConvexityClass::StrictlyConvex;
  if (s == "concave") return ConvexityClass::StrictlyConcave;
  if (s == "neither") return ConvexityClass::Neither;
  throw std::invalid_argument("unknown convexity class: " + std::string(s));
}

double h_p(double p, double r) {
  require_finite(p, "h_p");
  require_positive(r, "h_p");
  const double w = lambert::w0(r);
  return p * (w + 1) + w / (w + 1);
}

double h_p_offset(double p, double r) {
  require_finite(p, "h_p_offset");
  require_positive(r, "h_p_offset");
  const double w = lambert::w0(r);
  return (p + 1) * w - w * w / (w + 1);
}

double f1(double r) {
  require_positive(r, "f1");
  const double w1 = lambert::w0(r) + 1;
  return -1 / (w1 * w1);
}

double log_g_pq(double p, double q, double r) {
  require_finite(p, "log_g_pq");
  require_finite(q, "log_g_pq");
  require_positive(r, "log_g_pq");
  const double w = lambert::w0(r);
  const double power_term = (q == p) ? 0.0 : (q - p) * std::log(w);
  // -p W - ln(1 + W) = -(p + 1) W + (W - ln(1 + W))
  return power_term - (p + 1) * w + w_minus_log1p(w);
}

double g_pq(double p, double q, double r) {
  const double lg = log_g_pq(p, q, r);
  const double value = std::exp(lg);
  if (!std::isfinite(value) || value < std::numeric_limits<double>::min()) {
    throw std::range_error("g_pq: value outside double range (ln g = " + std::to_string(lg) + ")");
  }
  return value;
}

double c_of_p(double p) {
  if (!(p >= -1.0 && p <= 0.0)) {
    throw std::domain_error("c_of_p: p must lie in [-1, 0], got " + std::to_string(p));
  }
  return 1.0 - 2.0 * std::sqrt(-p);
}

double h_p_argmax(double p) {
  if (!(p > -1.0 && p < 0.0)) {
    throw std::domain_error("h_p_argmax: p must lie in (-1, 0), got " + std::to_string(p));
  }
  const double w = 1.0 / std::sqrt(-p) - 1.0;
  return w * std::exp(w);
}

bool in_d1(const HpqParams& params) { return params.p <= -1.0 && params.q >= params.p; }

bool in_d2(const HpqParams& params) {
  return params.p > -1.0 && params.p <= 0.0 && params.q >= c_of_p(params.p);
}

bool in_d3(const HpqParams& params) { return params.p >= 0.0 && params.q <= params.p; }

ConvexityClass classify(const HpqParams& params) {
  if (!std::isfinite(params.p) || !std::isfinite(params.q)) {
    throw std::domain_error("classify: p and q must be finite");
  }
  if (in_d1(params) || in_d2(params)) return ConvexityClass::StrictlyConvex;
  if (in_d3(params)) return ConvexityClass::StrictlyConcave;
  return ConvexityClass::Neither;
}

}  // namespace hpq::theory
