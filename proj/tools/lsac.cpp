#include <sys/resource.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lsac/algfile.hpp"
#include "lsac/cohomology.hpp"
#include "lsac/graded.hpp"
#include "lsac/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string hash_string(const std::string& bytes) {
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setfill('0') << std::setw(16) << lsac::fnv1a64(bytes);
  return os.str();
}

struct ComputeOptions {
  std::string file;
  int order = 0;
  bool all = false;
  bool graded = false;
  bool has_homogeneity = false;
  long homogeneity = 0;
  std::string report_path;
  bool skip_validate = false;
  bool timing = false;
};

long peak_rss_kb() {
  struct rusage usage {};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

int run_compute(const ComputeOptions& opt) {
  std::string bytes = read_file(opt.file);
  lsac::AlgebraInput input = lsac::parse_algebra_text(bytes, !opt.skip_validate);

  lsac::RunReport report;
  report.input = &input;
  report.input_path = opt.file;
  report.input_hash = hash_string(bytes);
  report.graded = opt.graded;
  report.flags["file"] = opt.file;
  report.flags["order"] = opt.all ? "all" : std::to_string(opt.order);
  report.flags["graded"] = opt.graded ? "true" : "false";
  if (opt.has_homogeneity) report.flags["homogeneity"] = std::to_string(opt.homogeneity);
  report.flags["skip_validate"] = opt.skip_validate ? "true" : "false";

  const int m = input.g.dim();
  std::vector<int> degrees;
  if (opt.all) {
    for (int k = 1; k <= m; ++k) degrees.push_back(k);
  } else {
    if (opt.order < 1 || opt.order > m) {
      std::cerr << "error: --order must lie in 1.." << m << "\n";
      return 2;
    }
    degrees.push_back(opt.order);
  }

  for (int k : degrees) {
    auto start = std::chrono::steady_clock::now();
    if (opt.graded) {
      lsac::GradedCohomology gc;
      if (opt.has_homogeneity) {
        gc.degree = k;
        gc.total.degree = k;
        auto blocks = lsac::split_basis(input.g, input.module, k);
        auto psi_blocks = k >= 2 ? lsac::split_basis(input.g, input.module, k - 1)
                                 : std::map<long, lsac::HomogeneityBlock>{};
        if (auto it = blocks.find(opt.homogeneity); it != blocks.end()) {
          std::vector<lsac::CochainIndex> psi;
          if (auto pit = psi_blocks.find(opt.homogeneity); pit != psi_blocks.end())
            psi = pit->second.members;
          lsac::CohomologyResult r = lsac::compute_cohomology_on(
              input.g, input.module, k, it->second.members, std::move(psi));
          gc.total = r;
          gc.blocks.emplace(opt.homogeneity, std::move(r));
        }
      } else {
        gc = lsac::compute_graded_cohomology(input.g, input.module, k);
      }
      report.graded_results.push_back(std::move(gc));
    } else {
      report.results.push_back(lsac::compute_cohomology(input.g, input.module, k));
    }
    if (opt.timing) {
      auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
      std::cerr << "timing: k=" << k << " " << std::fixed << std::setprecision(3)
                << elapsed.count() << " s (this implementation)\n";
    }
  }
  if (opt.timing) std::cerr << "timing: peak rss " << peak_rss_kb() << " kB\n";

  std::cout << lsac::human_report(report);
  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opt.report_path);
    out << lsac::json_report(report);
  }
  return 0;
}

int run_validate(const std::string& file) {
  std::string bytes = read_file(file);
  lsac::AlgebraInput input = lsac::parse_algebra_text(bytes, /*validate=*/true);
  std::cout << "ok: " << input.name << " (dim h=" << input.g.parent().dim()
            << ", dim g=" << input.g.dim() << ", module dim=" << input.module.module_dim()
            << ")\n";
  return 0;
}

int run_render(const std::string& file) {
  lsac::AlgebraInput input = lsac::parse_algebra_file(file, /*validate=*/true);
  std::cout << lsac::render_algebra_input(input);
  return 0;
}

struct SuiteCase {
  std::string file;
  bool graded;
  std::vector<std::pair<int, int>> expected_h;  // degree -> dim H
};

int run_suite(const std::string& dir, bool full) {
  std::vector<SuiteCase> cases = {
      {dir + "/ms7.alg", false, {{2, 8}, {3, 8}, {4, 5}, {5, 2}}},
      {dir + "/ams8.alg", true, {{2, 2}, {3, 1}}},
  };
  if (full) cases.push_back({dir + "/gl3sl3.alg", false, {{2, 0}, {3, 1}}});
  int failures = 0;
  for (const auto& c : cases) {
    lsac::AlgebraInput input = lsac::parse_algebra_file(c.file, /*validate=*/true);
    for (const auto& [k, expected] : c.expected_h) {
      int got;
      if (c.graded) {
        got = lsac::compute_graded_cohomology(input.g, input.module, k).total.dim_h;
      } else {
        got = lsac::compute_cohomology(input.g, input.module, k).dim_h;
      }
      bool pass = got == expected;
      failures += pass ? 0 : 1;
      std::cout << (pass ? "PASS" : "FAIL") << " " << input.name << " k=" << k << " dim H="
                << got << " expected=" << expected << (c.graded ? " (graded)" : "") << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of finite-dimensional Lie (super) algebras"};
  app.require_subcommand(1);

  ComputeOptions opt;
  CLI::App* compute = app.add_subcommand("compute", "compute H^k(g, V) for an algebra file");
  compute->add_option("--file", opt.file, "algebra definition file")->required();
  CLI::Option* order = compute->add_option("--order", opt.order, "cohomology degree k");
  CLI::Option* all = compute->add_flag("--all", opt.all, "every degree k = 1..dim g");
  order->excludes(all);
  all->excludes(order);
  compute->add_flag("--graded", opt.graded, "split by homogeneity (graded input only)");
  CLI::Option* hom = compute->add_option("--homogeneity", opt.homogeneity,
                                         "restrict the graded run to one homogeneity");
  compute->add_option("--report", opt.report_path, "write a machine-readable JSON report");
  compute->add_flag("--skip-validate", opt.skip_validate, "skip the axiom checks on load");
  compute->add_flag("--timing", opt.timing,
                    "print wall time and peak memory to stderr (this implementation's numbers)");

  std::string validate_file;
  CLI::App* validate = app.add_subcommand("validate", "parse and validate an algebra file");
  validate->add_option("--file", validate_file, "algebra definition file")->required();

  std::string render_file;
  CLI::App* render = app.add_subcommand("render", "print the canonical form of an algebra file");
  render->add_option("--file", render_file, "algebra definition file")->required();

  std::string suite_dir = "data";
  bool suite_full = false;
  CLI::App* suite = app.add_subcommand("suite", "run the bundled example suite");
  suite->add_option("--dir", suite_dir, "directory holding the bundled .alg files");
  suite->add_flag("--full", suite_full, "include the slow gl3/sl3 benchmark");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      if (!opt.all && order->count() == 0) {
        std::cerr << "error: give --order K or --all\n";
        return 2;
      }
      opt.has_homogeneity = hom->count() > 0;
      if (opt.has_homogeneity) opt.graded = true;
      return run_compute(opt);
    }
    if (validate->parsed()) return run_validate(validate_file);
    if (render->parsed()) return run_render(render_file);
    if (suite->parsed()) return run_suite(suite_dir, suite_full);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
