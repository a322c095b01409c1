#include "hpq/report_json.hpp"

#include <json.hpp>

namespace hpq::verify {
namespace {

using nlohmann::json;

json record_json(const ComparisonRecord& r) {
  return {{"x", r.x},
          {"y", r.y},
          {"p", r.p},
          {"q", r.q},
          {"lhs", static_cast<double>(r.lhs)},
          {"rhs", static_cast<double>(r.rhs)},
          {"gap", static_cast<double>(r.gap)}};
}

ComparisonRecord record_from(const json& j) {
  ComparisonRecord r;
  r.x = j.at("x").get<double>();
  r.y = j.at("y").get<double>();
  r.p = j.at("p").get<double>();
  r.q = j.at("q").get<double>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.gap = j.at("gap").get<double>();
  return r;
}

}  // namespace

std::string report_to_json(const VerificationReport& report, int indent) {
  json worst = json::array();
  for (const auto& r : report.worst_records) worst.push_back(record_json(r));
  const json doc = {
      {"params", {{"p", report.params.p}, {"q", report.params.q}}},
      {"expected", std::string(theory::to_string(report.expected))},
      {"n_samples", report.n_samples},
      {"n_gap_positive", report.n_gap_positive},
      {"n_gap_negative", report.n_gap_negative},
      {"max_abs_gap", static_cast<double>(report.max_abs_gap)},
      {"worst_records", worst},
      {"seed", report.seed},
      {"verdict", std::string(to_string(report.verdict))},
  };
  return doc.dump(indent);
}

VerificationReport report_from_json(std::string_view text) {
  const json doc = json::parse(text);
  VerificationReport report;
  report.params = {doc.at("params").at("p").get<double>(), doc.at("params").at("q").get<double>()};
  report.expected = theory::convexity_from_string(doc.at("expected").get<std::string>());
  report.n_samples = doc.at("n_samples").get<std::uint64_t>();
  report.n_gap_positive = doc.at("n_gap_positive").get<std::uint64_t>();
  report.n_gap_negative = doc.at("n_gap_negative").get<std::uint64_t>();
  report.max_abs_gap = doc.at("max_abs_gap").get<double>();
  for (const auto& r : doc.at("worst_records")) report.worst_records.push_back(record_from(r));
  report.seed = doc.at("seed").get<std::uint64_t>();
  const auto verdict = doc.at("verdict").get<std::string>();
  if (verdict != "pass" && verdict != "fail") {
    throw std::invalid_argument("report_from_json: unknown verdict " + verdict);
  }
  report.verdict = verdict == "pass" ? Verdict::Pass : Verdict::Fail;
  return report;
}

std::string counterexamples_to_json(const CounterexamplePair& pair, int indent) {
  const json doc = {{"violates_convexity", record_json(pair.violates_convexity)},
                    {"violates_concavity", record_json(pair.violates_concavity)}};
  return doc.dump(indent);
}

}  // namespace hpq::verify
