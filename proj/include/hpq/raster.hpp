#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hpq/hpq_theory.hpp"

namespace hpq::raster {

struct RasterWindow {
  double p_min = -3.0;
  double p_max = 3.0;
  double q_min = -3.0;
  double q_max = 3.0;
  double step = 0.05;
};

struct RasterCell {
  double p;
  double q;
  theory::ConvexityClass cls;
};

// Row-major over p (outer) then q, covering both window endpoints.
struct RegionRaster {
  RasterWindow window;
  std::vector<double> p_values;
  std::vector<double> q_values;
  std::vector<RasterCell> cells;
};

inline constexpr std::size_t kMaxCells = 25'000'000;

// Grid nodes lo, lo + step, ... ; the last node snaps to hi when the span is
// a whole number of steps.
std::vector<double> axis_nodes(double lo, double hi, double step);

// Throws std::domain_error for an empty or non-finite window, a
// non-positive step, or more than kMaxCells cells.
RegionRaster build_raster(const RasterWindow& window);

// Shortest decimal that round-trips to the same double.
std::string shortest(double v);

// Header `p,q,class`, one row per cell.
std::string to_csv(const RegionRaster& raster);

// Fill colours of the SVG rendering.
inline constexpr std::string_view kConvexColor = "#4c72b0";
inline constexpr std::string_view kConcaveColor = "#dd8452";
inline constexpr std::string_view kNeitherColor = "#e5e5e5";
inline constexpr std::string_view kBoundaryColor = "#000000";

// 800x800 SVG with one rectangle per cell, the curve q = C(p) on (-1, 0),
// axis labels and a legend.
std::string to_svg(const RegionRaster& raster);

}  // namespace hpq::raster
