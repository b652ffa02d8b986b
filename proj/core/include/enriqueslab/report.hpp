// Verification suites and machine-readable reports.  Each check is a pure
// function over a shared read-only workspace; checks run in a worker pool,
// results are assembled into a deterministic JSON report (byte-identical
// across runs up to the elapsed_ms fields).  Exports render the pairing
// graph (DOT, JSON), the lattice data, and the plane data.

#ifndef ENRIQUESLAB_REPORT_HPP
#define ENRIQUESLAB_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "enriqueslab/intmat.hpp"

namespace enriqueslab {

struct CheckResult {
  std::string check_id;
  std::string anchor;        // content slug, or "plumbing"
  std::string status;        // "pass" | "fail" | "skipped"
  std::string witness_json;  // JSON payload
  long elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  int config_index = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by check_id
  int passed = 0, failed = 0, skipped = 0;

  bool all_passed() const { return failed == 0; }
  std::string to_json() const;  // schema enriqueslab/v1
};

inline constexpr const char* kSuiteNames[] = {"all", "plane", "lattice", "gamma", "vinberg",
                                              "char2"};
bool is_suite_name(const std::string& name);

// Runs the named suite.  config_index selects the contraction configuration
// (canonical order); seed drives the randomized property checks; workers = 0
// means hardware concurrency.
VerificationReport run_suite(const std::string& suite, int config_index = 0,
                             std::uint64_t seed = 0, unsigned workers = 0);

// Exports.  what is one of: gamma-dot, gamma-json, lattice-json, plane-json.
bool is_export_name(const std::string& what);
std::string render_export(const std::string& what, int config_index = 0);

// Reader for the lattice-json export; used by the round-trip contract.
struct LatticeExportData {
  IntMatrix gram22, gram10;
  std::vector<std::string> labels;
  IntMatrix class_coords;  // 40 x 10
};
LatticeExportData read_lattice_json(const std::string& json_text);

}  // namespace enriqueslab

#endif
