#include "hpq/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace hpq::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hpq_cli_test_" + name);
}

TEST(Cli, EvalW) {
  const Result r = call({"eval", "w", "2.718281828459045"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(call({"eval", "w", "1"}).out, "0.5671432904097838\n");
}

TEST(Cli, EvalMean) {
  EXPECT_EQ(call({"eval", "mean", "1", "2", "4"}).out, "3\n");
  EXPECT_EQ(call({"eval", "mean", "--", "-1", "2", "6"}).out, "3\n");
}

TEST(Cli, Classify) {
  Result r = call({"classify", "--", "-1", "-1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "convex\n");
  r = call({"classify", "0", "0.5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "neither\n");
  EXPECT_EQ(call({"classify", "1", "1"}).out, "concave\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"classify", "1"},
           {"classify", "one", "two"},
           {"eval"},
           {"verify", "1", "1", "--samples", "0"},
           {"raster", "--step", "0.1"}}) {
    const Result r = call(args);
    EXPECT_EQ(r.code, kExitUsage) << (args.empty() ? "<none>" : args[0]);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  }
}

TEST(Cli, DomainErrorsExitTwo) {
  EXPECT_EQ(call({"eval", "w", "--", "-1"}).code, kExitUsage);
  EXPECT_EQ(call({"eval", "mean", "1", "0", "2"}).code, kExitUsage);
  EXPECT_EQ(call({"classify", "nan", "0"}).code, kExitUsage);
  EXPECT_EQ(call({"counterexample", "1", "1"}).code, kExitUsage);
  EXPECT_EQ(call({"raster", "--step", "-1", "--out", temp_path("x.csv").string()}).code,
            kExitUsage);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(call({"--help"}).code, kExitOk); }

TEST(Cli, VerifyWritesJson) {
  const auto path = temp_path("report.json");
  const Result r = call({"verify", "--samples", "2000", "--seed", "5", "--json", path.string(),
                         "--", "-1", "-1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verdict pass"), std::string::npos);
  const auto doc = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(doc["n_samples"], 2000u);
  EXPECT_EQ(doc["seed"], 5u);
  EXPECT_EQ(doc["expected"], "convex");
  std::filesystem::remove(path);
}

TEST(Cli, VerifyUnwritableJsonIsIoError) {
  EXPECT_EQ(call({"verify", "1", "1", "--samples", "10", "--json", "/nonexistent/dir/r.json"}).code,
            kExitUsage);
}

TEST(Cli, Counterexample) {
  const Result r = call({"counterexample", "2", "3", "--budget", "20000", "--seed", "1"});
  EXPECT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_GT(doc["violates_convexity"]["gap"].get<double>(), 0.0);
  EXPECT_LT(doc["violates_concavity"]["gap"].get<double>(), 0.0);
  EXPECT_EQ(call({"counterexample", "2", "3", "--budget", "1"}).code, kExitFail);
}

TEST(Cli, RasterCsvAndSvg) {
  const auto csv = temp_path("r.csv");
  const auto svg = temp_path("r.svg");
  Result r = call({"raster", "--out", csv.string(), "--svg", svg.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const std::string first = slurp(csv);
  EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 121 * 121 + 1);
  EXPECT_NE(first.find("\n-1,-1,convex\n"), std::string::npos);
  EXPECT_NE(first.find("\n1,1,concave\n"), std::string::npos);
  EXPECT_NE(first.find("\n0,0.5,neither\n"), std::string::npos);
  EXPECT_NE(first.find("\n-0.25,0,convex\n"), std::string::npos);
  EXPECT_NE(first.find("\n0.5,0.5,concave\n"), std::string::npos);
  EXPECT_NE(slurp(svg).find("<svg"), std::string::npos);

  r = call({"raster", "--window", "-3", "3", "-3", "3", "--step", "0.05", "--out", csv.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(slurp(csv), first);
  std::filesystem::remove(csv);
  std::filesystem::remove(svg);
}

TEST(Cli, SelftestPasses) {
  const Result r = call({"selftest"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, SelftestSeedStable) {
  for (const char* seed : {"1", "7", "123", "99991", "18446744073709551615"}) {
    const Result r = call({"selftest", "--seed", seed});
    EXPECT_EQ(r.code, kExitOk) << "seed " << seed << "\n" << r.out;
  }
}

TEST(Cli, SelftestDetectsInjectedFault) {
  const Result r = call({"selftest", "--samples", "500", "--inject-fault"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("FAIL region (1, 1)"), std::string::npos);
}

}  // namespace
}  // namespace hpq::cli
