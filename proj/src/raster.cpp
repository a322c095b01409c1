#include "hpq/raster.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace hpq::raster {

std::vector<double> axis_nodes(double lo, double hi, double step) {
  const double span = (hi - lo) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> nodes(count);
  for (std::size_t i = 0; i < count; ++i) nodes[i] = lo + static_cast<double>(i) * step;
  if (std::fabs(nodes.back() - hi) <= 1e-9 * step) nodes.back() = hi;
  return nodes;
}

RegionRaster build_raster(const RasterWindow& w) {
  for (double v : {w.p_min, w.p_max, w.q_min, w.q_max, w.step}) {
    if (!std::isfinite(v)) throw std::domain_error("raster: window values must be finite");
  }
  if (!(w.step > 0)) throw std::domain_error("raster: step must be positive");
  if (w.p_min > w.p_max || w.q_min > w.q_max) {
    throw std::domain_error("raster: window minimum exceeds maximum");
  }
  const double estimate = ((w.p_max - w.p_min) / w.step + 1) * ((w.q_max - w.q_min) / w.step + 1);
  if (estimate > static_cast<double>(kMaxCells)) {
    throw std::domain_error("raster: window/step gives too many cells");
  }

  RegionRaster out;
  out.window = w;
  out.p_values = axis_nodes(w.p_min, w.p_max, w.step);
  out.q_values = axis_nodes(w.q_min, w.q_max, w.step);
  const std::size_t nq = out.q_values.size();
  out.cells.resize(out.p_values.size() * nq);

  const auto np = static_cast<std::int64_t>(out.p_values.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < np; ++i) {
    const double p = out.p_values[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < nq; ++j) {
      const double q = out.q_values[j];
      out.cells[static_cast<std::size_t>(i) * nq + j] = {p, q, theory::classify({p, q})};
    }
  }
  return out;
}

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_csv(const RegionRaster& raster) {
  std::string out = "p,q,class\n";
  out.reserve(raster.cells.size() * 24);
  for (const RasterCell& c : raster.cells) {
    out += shortest(c.p);
    out += ',';
    out += shortest(c.q);
    out += ',';
    out += theory::to_string(c.cls);
    out += '\n';
  }
  return out;
}

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 80.0;
constexpr double kPlot = kSize - 2 * kMargin;

std::string_view color_of(theory::ConvexityClass c) {
  switch (c) {
    case theory::ConvexityClass::StrictlyConvex:
      return kConvexColor;
    case theory::ConvexityClass::StrictlyConcave:
      return kConcaveColor;
    case theory::ConvexityClass::Neither:
      return kNeitherColor;
  }
  return kNeitherColor;
}

}  // namespace

std::string to_svg(const RegionRaster& raster) {
  const RasterWindow& w = raster.window;
  // A degenerate axis still gets one cell of width `step`.
  const double p_lo = w.p_min - w.step / 2;
  const double p_hi = w.p_max + w.step / 2;
  const double q_lo = w.q_min - w.step / 2;
  const double q_hi = w.q_max + w.step / 2;
  const auto sx = [&](double p) { return kMargin + (p - p_lo) / (p_hi - p_lo) * kPlot; };
  const auto sy = [&](double q) { return kMargin + (q_hi - q) / (q_hi - q_lo) * kPlot; };
  const double cw = w.step / (p_hi - p_lo) * kPlot;
  const double ch = w.step / (q_hi - q_lo) * kPlot;

  std::ostringstream svg;
  svg.precision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
  svg << "<g shape-rendering=\"crispEdges\">\n";
  for (const RasterCell& c : raster.cells) {
    svg << "<rect x=\"" << sx(c.p) - cw / 2 << "\" y=\"" << sy(c.q) - ch / 2 << "\" width=\""
        << cw << "\" height=\"" << ch << "\" fill=\"" << color_of(c.cls) << "\"/>\n";
  }
  svg << "</g>\n";

  // q = C(p) on (-1, 0), clipped to the window.
  const double c_lo = std::max(-1.0, p_lo);
  const double c_hi = std::min(0.0, p_hi);
  if (c_lo < c_hi) {
    svg << "<polyline fill=\"none\" stroke=\"" << kBoundaryColor
        << "\" stroke-width=\"2\" points=\"";
    constexpr int kSegments = 200;
    for (int i = 0; i <= kSegments; ++i) {
      const double p = c_lo + (c_hi - c_lo) * i / kSegments;
      const double q = std::clamp(theory::c_of_p(p), q_lo, q_hi);
      svg << sx(p) << ',' << sy(q) << ' ';
    }
    svg << "\"/>\n";
  }

  svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kPlot
      << "\" height=\"" << kPlot << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  svg << "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"#000000\">\n";
  for (double t = std::ceil(p_lo); t <= p_hi; t += 1.0) {
    svg << "<text x=\"" << sx(t) << "\" y=\"" << kMargin + kPlot + 20
        << "\" text-anchor=\"middle\">" << t << "</text>\n";
  }
  for (double t = std::ceil(q_lo); t <= q_hi; t += 1.0) {
    svg << "<text x=\"" << kMargin - 10 << "\" y=\"" << sy(t) + 5 << "\" text-anchor=\"end\">"
        << t << "</text>\n";
  }
  svg << "<text x=\"" << kMargin + kPlot / 2 << "\" y=\"" << kSize - 30
      << "\" text-anchor=\"middle\" font-size=\"18\">p</text>\n";
  svg << "<text x=\"25\" y=\"" << kMargin + kPlot / 2
      << "\" text-anchor=\"middle\" font-size=\"18\">q</text>\n";

  const std::pair<std::string_view, std::string_view> legend[] = {
      {kConvexColor, "strictly convex"},
      {kConcaveColor, "strictly concave"},
      {kNeitherColor, "neither"},
  };
  double lx = kMargin;
  for (const auto& [color, label] : legend) {
    svg << "<rect x=\"" << lx << "\" y=\"30\" width=\"16\" height=\"16\" fill=\"" << color
        << "\" stroke=\"#000000\"/>\n";
    svg << "<text x=\"" << lx + 22 << "\" y=\"43\">" << label << "</text>\n";
    lx += 170;
  }
  svg << "<line x1=\"" << lx << "\" y1=\"38\" x2=\"" << lx + 16 << "\" y2=\"38\" stroke=\""
      << kBoundaryColor << "\" stroke-width=\"2\"/>\n";
  svg << "<text x=\"" << lx + 22 << "\" y=\"43\">q = C(p)</text>\n";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace hpq::raster
