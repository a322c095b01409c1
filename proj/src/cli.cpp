#include "hpq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <stdexcept>

#include "hpq/holder_means.hpp"
#include "hpq/hpq_theory.hpp"
#include "hpq/lambert_w.hpp"
#include "hpq/raster.hpp"
#include "hpq/report_json.hpp"
#include "hpq/verifier.hpp"

namespace hpq::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << content;
  if (!f) throw IoError("failed writing " + path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lambert W, Hölder means and H_{p,q}-convexity classification", "hpq"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate W or a Hölder mean");
  eval->require_subcommand(1);
  double z = 0;
  auto* eval_w = eval->add_subcommand("w", "Principal branch W0(z)");
  eval_w->add_option("z", z, "argument, z >= 0")->required();
  double mp = 0, mr = 0, ms = 0;
  auto* eval_mean = eval->add_subcommand("mean", "Hölder mean H_p(r, s)");
  eval_mean->add_option("p", mp)->required();
  eval_mean->add_option("r", mr)->required();
  eval_mean->add_option("s", ms)->required();

  theory::HpqParams pq;
  auto* classify = app.add_subcommand("classify", "Classify (p, q)");
  classify->add_option("p", pq.p)->required();
  classify->add_option("q", pq.q)->required();

  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "Randomised region check of (p, q)");
  verify->add_option("p", pq.p)->required();
  verify->add_option("q", pq.q)->required();
  verify->add_option("--samples", samples, "sample pairs")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "64-bit seed");
  verify->add_option("--json", json_path, "write the report as JSON");

  std::uint64_t budget = kDefaultBudget;
  auto* counter = app.add_subcommand("counterexample", "Witnesses in a neither region");
  counter->add_option("p", pq.p)->required();
  counter->add_option("q", pq.q)->required();
  counter->add_option("--budget", budget, "random pairs to try")->check(CLI::PositiveNumber);
  counter->add_option("--seed", seed, "64-bit seed");

  raster::RasterWindow window;
  std::vector<double> window_args;
  std::string csv_path;
  std::string svg_path;
  auto* rast = app.add_subcommand("raster", "Region map over a (p, q) window");
  rast->add_option("--window", window_args, "PMIN PMAX QMIN QMAX")->expected(4);
  rast->add_option("--step", window.step, "grid step");
  rast->add_option("--out", csv_path, "CSV output path")->required();
  rast->add_option("--svg", svg_path, "optional SVG output path");

  bool inject_fault = false;
  auto* self = app.add_subcommand("selftest", "Run every verification fixture");
  self->add_option("--samples", samples, "sample pairs per region")->check(CLI::PositiveNumber);
  self->add_option("--seed", seed, "64-bit seed");
  self->add_flag("--inject-fault", inject_fault, "flip the (1,1) expectation");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hpq: " << e.what() << '\n';
    return kExitUsage;
  }

  out.precision(17);
  try {
    if (eval_w->parsed()) {
      out << raster::shortest(lambert::w0(z)) << '\n';
    } else if (eval_mean->parsed()) {
      out << raster::shortest(means::holder_mean(mp, mr, ms)) << '\n';
    } else if (classify->parsed()) {
      out << theory::to_string(theory::classify(pq)) << '\n';
    } else if (verify->parsed()) {
      const verify::VerificationReport r = verify::verify_region(pq, samples, seed);
      if (!json_path.empty()) write_file(json_path, verify::report_to_json(r) + "\n");
      out << "expected " << theory::to_string(r.expected) << ", samples " << r.n_samples
          << ", positive " << r.n_gap_positive << ", negative " << r.n_gap_negative
          << ", max |gap| " << static_cast<double>(r.max_abs_gap) << ", verdict "
          << verify::to_string(r.verdict) << '\n';
      return r.verdict == verify::Verdict::Pass ? kExitOk : kExitFail;
    } else if (counter->parsed()) {
      out << verify::counterexamples_to_json(verify::find_counterexamples(pq, budget, seed))
          << '\n';
    } else if (rast->parsed()) {
      if (!window_args.empty()) {
        window.p_min = window_args[0];
        window.p_max = window_args[1];
        window.q_min = window_args[2];
        window.q_max = window_args[3];
      }
      const raster::RegionRaster grid = raster::build_raster(window);
      write_file(csv_path, raster::to_csv(grid));
      if (!svg_path.empty()) write_file(svg_path, raster::to_svg(grid));
      out << "wrote " << grid.cells.size() << " cells to " << csv_path << '\n';
    } else if (self->parsed()) {
      return selftest({samples, seed, inject_fault}, out);
    }
  } catch (const verify::SearchExhausted& e) {
    err << "hpq: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::logic_error& e) {  // domain_error, invalid_argument
    err << "hpq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::range_error& e) {
    err << "hpq: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "hpq: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace hpq::cli
