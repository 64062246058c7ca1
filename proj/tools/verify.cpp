// verify: runs the exact identity suites and writes a JSON report.
//
//   verify --suite theorem1 --n 3 --seed 7 --out report.json
//   verify --config run.ini --mutate rrt2
//
// The config file holds `key = value` lines using the long option names
// (lists as `n = [2, 3]`). Exit status is 0 iff every case passes.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "rttkit/errors.hpp"
#include "rttkit/suites.hpp"

int main(int argc, char** argv) {
  rttkit::RunConfig cfg;
  std::string c_text = "1";
  std::string out_path;
  bool no_timing = false;
  bool quiet = false;

  CLI::App app{"Exact verification of RTT-algebra identities"};
  app.set_config("--config", "", "key = value configuration file");
  app.add_option("--suite", cfg.suites, "rtt | qdet | gauss | theorem1 | scalar | all")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--n", cfg.n, "ranks N (2 and/or 3)")->delimiter(',')->capture_default_str();
  app.add_option("--l", cfg.l, "chain lengths L")->delimiter(',')->capture_default_str();
  app.add_option("--c", c_text, "R-matrix constant c, as p/q")->capture_default_str();
  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--bound", cfg.bound, "numerator/denominator bound of sampled rationals")->capture_default_str();
  app.add_option("--rtt-pairs", cfg.rtt_pairs, "point pairs per RTT case")->capture_default_str();
  app.add_option("--qdet-points", cfg.qdet_points, "points per inverse/qdet case")->capture_default_str();
  app.add_option("--hat-points", cfg.hat_points, "points per hatted-eigenvalue case")->capture_default_str();
  app.add_option("--gauss-points", cfg.gauss_points, "points per Gauss case")->capture_default_str();
  app.add_option("--gauss-max-l", cfg.gauss_max_l, "largest L in the Gauss suite")->capture_default_str();
  app.add_option("--theorem1-max-n2", cfg.theorem1_max_n2, "largest a for N=2 Bethe vectors")->capture_default_str();
  app.add_option("--theorem1-max-set", cfg.theorem1_max_set, "largest a_s for N=3 Bethe vectors")
      ->capture_default_str();
  app.add_option("--scalar-max-n2", cfg.scalar_max_n2, "largest a for N=2 scalar products")->capture_default_str();
  app.add_option("--scalar-max-set", cfg.scalar_max_set, "largest a_s for N=3 scalar products")
      ->capture_default_str();
  app.add_option("--held-out", cfg.held_out, "held-out realizations per W extraction")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  app.add_option("--mutate", cfg.mutate, "inject a corruption: rrt2 | inver | zm-comF | mid | WW1");
  app.add_option("--out", out_path, "report path (default: stdout)");
  app.add_flag("--no-timing", no_timing, "leave timing fields out of the report");
  app.add_flag("--quiet", quiet, "no per-suite summary on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  rttkit::Report report;
  try {
    cfg.c = rttkit::parse_scalar(c_text);
    report = rttkit::run(cfg);
  } catch (const rttkit::Error& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 1;
  }

  const std::string text = report.to_json(!no_timing);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!(out << text)) {
      std::cerr << "verify: cannot write " << out_path << "\n";
      return 1;
    }
  }

  if (!quiet) {
    for (const auto& s : report.suites) {
      std::size_t failed = 0;
      for (const auto& c : s.cases) failed += !c.passed;
      std::cerr << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.cases.size() - failed << "/"
                << s.cases.size() << " cases\n";
      for (const auto& c : s.cases)
        if (!c.passed) std::cerr << "  FAIL " << c.key << " [" << c.anchor << "] " << c.detail << "\n";
    }
  }
  return report.passed() ? 0 : 1;
}
