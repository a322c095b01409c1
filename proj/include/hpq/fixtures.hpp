#pragma once

#include <array>

#include "hpq/hpq_theory.hpp"

// Parameter sets exercised by the self-test and the acceptance suite.
namespace hpq::fixtures {

inline constexpr std::array<double, 10> kHLemmaOrders = {-2.0, -1.0, -0.9, -0.75, -0.5,
                                                         -0.25, -0.1, 0.0,  0.5,   2.0};

// Covers all four clauses of the g_{p,q} monotonicity lemma.
inline constexpr std::array<theory::HpqParams, 12> kGLemmaPairs = {{
    {1.0, 1.0},     // p > 0, q <= p: decreasing
    {2.0, 0.5},     // p > 0, q <= p: decreasing
    {1.0, 2.0},     // p > 0, q > p: non-monotone
    {0.0, 1.0},     // p = 0, q >= 1: increasing
    {0.0, 0.0},     // p = 0, q <= 0: decreasing
    {0.0, 0.5},     // p = 0, 0 < q < 1: non-monotone
    {-2.0, -1.0},   // p <= -1, q >= p: increasing
    {-1.0, -1.0},   // p <= -1, q = p: increasing
    {-2.0, -3.0},   // p <= -1, q < p: non-monotone
    {-0.5, -0.3},   // -1 < p < 0, q >= C(p): increasing
    {-0.25, 0.0},   // -1 < p < 0, q = C(p): increasing
    {-0.5, -1.0},   // -1 < p < 0, q < C(p): non-monotone
}};

inline constexpr std::array<double, 11> kRegionAxis = {-3.0, -2.0, -1.0, -0.75, -0.5, -0.25,
                                                       -0.1, 0.0,  0.25, 1.0,   2.0};

inline constexpr std::array<theory::HpqParams, 4> kNeitherPairs = {{
    {2.0, 3.0},
    {-2.0, -3.0},
    {0.0, 0.5},
    {-0.5, -1.0},
}};

}  // namespace hpq::fixtures
