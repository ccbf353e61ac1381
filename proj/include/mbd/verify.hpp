#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mbd/solver.hpp"

namespace mbd {

enum class CheckStatus { kPass, kFail, kSkippedBudget };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string id;        // "<suite>/<instance>/<property>", unique per run
  std::string instance;  // human-readable description of the input
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::kPass;
  std::string note;  // budget reason for skipped results
  std::uint64_t nodes = 0;
  double wall_seconds = 0;
};

/// Parameter grids. The defaults are exactly the acceptance grids.
struct SuiteConfig {
  // Paths: odd n up to path_max_n, n = path_stretch_n in the stretch tier,
  // even n from even_paths, restricted-board check for odd n <= moreover_max_n.
  int path_max_n = 13;
  int path_stretch_n = 15;
  std::vector<int> even_paths{2, 4, 6, 8, 10};
  int moreover_max_n = 11;

  std::vector<int> tadpole_n{3, 4, 5, 6, 8};
  std::vector<int> tadpole_k{1, 2, 3, 5};
  int tadpole_max_sum = 13;

  int fprime_max_k = 2;
  int fprime_stretch_k = 3;
  std::vector<std::array<int, 3>> triples{{2, 2, 2}, {2, 2, 3}, {2, 3, 3}};
  std::vector<int> star1_k{2, 3, 4, 5};
  std::vector<int> star2_k{2, 3, 4};

  // Catalog sizes.
  int graph_order_cap = 6;        // connected graphs for inequalities and duality
  int union_order_cap = 4;        // components of two-component unions
  int pass_order_cap = 5;         // all graphs for the pass-variant bounds
  int hypergraph_exhaustive = 4;  // all simple hypergraphs up to this order
  int hypergraph_sample_order = 5;
  int hypergraph_samples = 500;
  int random_graphs = 40;  // extra connected graphs for inequalities
  int random_graph_min_order = 7;
  int random_graph_max_order = 9;

  std::vector<int> pairing_cycles{4, 6, 8, 10, 12};

  std::uint64_t log_bound_max = 4096;

  std::uint64_t seed = 20240601;
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Worker threads; 0 means one per hardware thread.
  int threads = 0;
  /// Run stretch-tier instances (P_15, F'_3).
  bool stretch = true;
  /// Emit wall times in reports. Off by default so reports are byte-stable.
  bool record_time = false;
};

/// Suite names accepted by run_suites, in report order.
const std::vector<std::string>& suite_names();

/// A unit of work for the worker pool. Each job gets a fresh solver, so its
/// results (node counts included) do not depend on scheduling.
struct CheckJob {
  std::string name;
  bool stretch = false;
  std::function<std::vector<CheckResult>(Solver&)> run;
};

/// Builds the jobs of one suite. Throws std::invalid_argument on an unknown name.
std::vector<CheckJob> suite_jobs(const std::string& suite, const SuiteConfig& cfg);

/// Runs jobs on cfg.threads workers and returns the results sorted by id.
std::vector<CheckResult> run_jobs(std::vector<CheckJob> jobs, const SuiteConfig& cfg);

/// Runs the named suites (all suites when empty).
std::vector<CheckResult> run_suites(const std::vector<std::string>& suites, const SuiteConfig& cfg);

// One entry point per theorem family.
std::vector<CheckResult> check_paths(const SuiteConfig& cfg);
std::vector<CheckResult> check_tadpoles(const SuiteConfig& cfg);
/// F'_k, G_{r,s,t}, subdivided stars, and the isolated-vertex D-game check.
std::vector<CheckResult> check_constructions(const SuiteConfig& cfg);
std::vector<CheckResult> check_inequalities(const SuiteConfig& cfg);
std::vector<CheckResult> check_duality(const SuiteConfig& cfg);
std::vector<CheckResult> probe_conjecture(const SuiteConfig& cfg);
std::vector<CheckResult> check_pairing(const SuiteConfig& cfg);
std::vector<CheckResult> check_log_bound(const SuiteConfig& cfg);

struct Summary {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
};
Summary summarize(const std::vector<CheckResult>& results);

/// JSON report: {suite, config, results, summary}.
std::string json_report(const std::string& suite, const SuiteConfig& cfg,
                        const std::vector<CheckResult>& results);
/// CSV with one line per result.
std::string csv_report(const std::vector<CheckResult>& results, bool with_time = false);

/// "n=4 e=0-1,1-2,2-3".
std::string describe(const Graph& g);

}  // namespace mbd
