// Command line front end: run verification suites and write reports, or
// export the graph / lattice / plane data.
//
//   enriqueslab --suite all --out report.json
//   enriqueslab --suite vinberg --config-index 3 --seed 7
//   enriqueslab --export gamma-dot --out gamma.dot
//
// Exit codes: 0 every non-skipped check passed, 1 some check failed,
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "enriqueslab/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the 40-class reflection configuration"};
  app.name("enriqueslab");

  std::string suite = "all";
  int config_index = 0;
  std::string export_what;
  std::string out_path;
  std::uint64_t seed = 0;

  app.add_option("--suite", suite, "Suite to run: all, plane, lattice, gamma, vinberg, char2")
      ->check(CLI::IsMember({"all", "plane", "lattice", "gamma", "vinberg", "char2"}));
  app.add_option("--config-index", config_index,
                 "Which contraction configuration to use (canonical order)");
  app.add_option("--export", export_what,
                 "Write an export instead of running checks: gamma-dot, gamma-json, "
                 "lattice-json, plane-json")
      ->check(CLI::IsMember({"gamma-dot", "gamma-json", "lattice-json", "plane-json"}));
  app.add_option("--out", out_path, "Output file (stdout when omitted)");
  app.add_option("--seed", seed, "Seed for the randomized property checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto write_out = [&](const std::string& text) {
    if (out_path.empty()) {
      std::cout << text;
      return true;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "enriqueslab: cannot open " << out_path << " for writing\n";
      return false;
    }
    f << text;
    if (!f) {
      std::cerr << "enriqueslab: write failed for " << out_path << "\n";
      return false;
    }
    return true;
  };

  try {
    if (!export_what.empty()) {
      return write_out(enriqueslab::render_export(export_what, config_index)) ? 0 : 1;
    }
    enriqueslab::VerificationReport report =
        enriqueslab::run_suite(suite, config_index, seed);
    if (!write_out(report.to_json())) return 1;
    for (const auto& c : report.checks)
      std::cerr << (c.status == "pass" ? "[PASS] " : c.status == "fail" ? "[FAIL] " : "[SKIP] ")
                << c.check_id << " (" << c.elapsed_ms << " ms)\n";
    std::cerr << report.passed << " passed, " << report.failed << " failed, " << report.skipped
              << " skipped\n";
    return report.all_passed() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "enriqueslab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "enriqueslab: " << e.what() << "\n";
    return 1;
  }
}
