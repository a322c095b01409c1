#include <gtest/gtest.h>

#include <charconv>
#include <json.hpp>
#include <sstream>
#include <string>

#include "hpq/raster.hpp"
#include "hpq/report_json.hpp"

namespace hpq {
namespace {

using theory::ConvexityClass;

TEST(ReportJson, FieldNames) {
  const verify::VerificationReport r = verify::verify_region({0, 0.5}, 500, 7);
  const auto doc = nlohmann::json::parse(verify::report_to_json(r));
  for (const char* key : {"params", "expected", "n_samples", "n_gap_positive", "n_gap_negative",
                          "max_abs_gap", "worst_records", "seed", "verdict"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["expected"], "neither");
  EXPECT_EQ(doc["verdict"], "pass");
  EXPECT_EQ(doc["seed"], 7u);
  EXPECT_EQ(doc["params"]["q"], 0.5);
  const auto& rec = doc["worst_records"].at(0);
  for (const char* key : {"x", "y", "p", "q", "lhs", "rhs", "gap"}) {
    EXPECT_TRUE(rec.contains(key)) << key;
  }
}

TEST(ReportJson, RoundTripIsStable) {
  for (const theory::HpqParams pq : {theory::HpqParams{-1, -1}, theory::HpqParams{2, 3}}) {
    const verify::VerificationReport r = verify::verify_region(pq, 1000, 99);
    const std::string text = verify::report_to_json(r);
    const verify::VerificationReport back = verify::report_from_json(text);
    EXPECT_EQ(verify::report_to_json(back), text);
    EXPECT_EQ(back.n_gap_positive, r.n_gap_positive);
    EXPECT_EQ(back.expected, r.expected);
    ASSERT_EQ(back.worst_records.size(), r.worst_records.size());
    for (std::size_t i = 0; i < r.worst_records.size(); ++i) {
      EXPECT_EQ(back.worst_records[i].x, r.worst_records[i].x);
      EXPECT_EQ(static_cast<double>(back.worst_records[i].gap),
                static_cast<double>(r.worst_records[i].gap));
    }
  }
}

TEST(ReportJson, RejectsMalformed) {
  EXPECT_ANY_THROW(verify::report_from_json("{}"));
  EXPECT_ANY_THROW(verify::report_from_json("not json"));
}

TEST(Raster, DefaultWindowHas121By121Cells) {
  const raster::RegionRaster r = raster::build_raster({});
  EXPECT_EQ(r.p_values.size(), 121u);
  EXPECT_EQ(r.q_values.size(), 121u);
  EXPECT_EQ(r.cells.size(), 121u * 121u);
  EXPECT_EQ(r.p_values.front(), -3.0);
  EXPECT_EQ(r.p_values.back(), 3.0);
}

TEST(Raster, AxisNodes) {
  EXPECT_EQ(raster::axis_nodes(0.0, 1.0, 0.1).size(), 11u);
  EXPECT_EQ(raster::axis_nodes(0.0, 1.0, 0.1).back(), 1.0);
  EXPECT_EQ(raster::axis_nodes(0.0, 1.0, 0.3).size(), 4u);  // 0, .3, .6, .9
  EXPECT_EQ(raster::axis_nodes(2.0, 2.0, 0.5).size(), 1u);
}

TEST(Raster, ShortestRoundTrip) {
  EXPECT_EQ(raster::shortest(-0.25), "-0.25");
  EXPECT_EQ(raster::shortest(0.0), "0");
  EXPECT_EQ(raster::shortest(0.1), "0.1");
  for (double v : {1.0 / 3.0, -2.9499999999999997, 1e-300}) {
    const std::string s = raster::shortest(v);
    double back = 0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    EXPECT_EQ(back, v);
  }
}

TEST(Raster, CsvRowsAgreeWithClassify) {
  const raster::RegionRaster r = raster::build_raster({});
  std::istringstream csv(raster::to_csv(r));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "p,q,class");
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double p = std::stod(line.substr(0, c1));
    const double q = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    ASSERT_EQ(line.substr(c2 + 1), theory::to_string(theory::classify({p, q}))) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 121u * 121u);
}

TEST(Raster, ByteIdenticalAcrossRuns) {
  const raster::RasterWindow w{-1.5, 0.5, -2, 2, 0.01};
  EXPECT_EQ(raster::to_csv(raster::build_raster(w)), raster::to_csv(raster::build_raster(w)));
  EXPECT_EQ(raster::to_svg(raster::build_raster(w)), raster::to_svg(raster::build_raster(w)));
}

TEST(Raster, SvgHasColoursCurveAndLegend) {
  const std::string svg = raster::to_svg(raster::build_raster({}));
  EXPECT_NE(svg.find("width=\"800\" height=\"800\""), std::string::npos);
  EXPECT_NE(svg.find(raster::kConvexColor), std::string::npos);
  EXPECT_NE(svg.find(raster::kConcaveColor), std::string::npos);
  EXPECT_NE(svg.find(raster::kNeitherColor), std::string::npos);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("q = C(p)"), std::string::npos);
  EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
  // No C(p) curve when the window misses (-1, 0).
  const std::string right = raster::to_svg(raster::build_raster({1, 2, -1, 1, 0.5}));
  EXPECT_EQ(right.find("<polyline"), std::string::npos);
}

TEST(Raster, RejectsBadWindows) {
  EXPECT_THROW(raster::build_raster({1, 0, 0, 1, 0.1}), std::domain_error);
  EXPECT_THROW(raster::build_raster({0, 1, 0, 1, 0}), std::domain_error);
  EXPECT_THROW(raster::build_raster({0, 1, 0, 1, -0.1}), std::domain_error);
  EXPECT_THROW(raster::build_raster({0, 1e9, 0, 1e9, 1e-3}), std::domain_error);
}

}  // namespace
}  // namespace hpq
