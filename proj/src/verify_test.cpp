#include "mbd/verify.hpp"

#include <doctest.h>

#include <json.hpp>
#include <set>

#include "mbd/catalog.hpp"
#include "mbd/families.hpp"

using namespace mbd;

TEST_CASE("catalog sizes") {
  const std::vector<std::size_t> all{1, 1, 2, 4, 11, 34, 156};
  const std::vector<std::size_t> connected{0, 1, 1, 2, 6, 21, 112};
  for (int n = 0; n <= 6; ++n) {
    CHECK(all_graphs(n).size() == all[static_cast<std::size_t>(n)]);
    CHECK(connected_graphs(n).size() == connected[static_cast<std::size_t>(n)]);
  }
  const std::vector<std::size_t> hyper{1, 4, 18, 166};
  for (int n = 1; n <= 4; ++n) CHECK(simple_hypergraphs(n).size() == hyper[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("catalog members are pairwise non-isomorphic") {
  std::set<std::uint64_t> codes;
  for (const Graph& g : all_graphs(6)) codes.insert(canonical_code(g));
  CHECK(codes.size() == 156);
  // Relabelling does not change the code.
  const Graph p = path(5).graph;
  Graph q(5);
  q.add_edge(3, 0);
  q.add_edge(0, 4);
  q.add_edge(4, 1);
  q.add_edge(1, 2);
  CHECK(canonical_code(p) == canonical_code(q));
}

TEST_CASE("sampler is seeded") {
  Sampler a(42);
  Sampler b(42);
  for (int i = 0; i < 20; ++i) {
    const Hypergraph ha = a.simple_hypergraph(5);
    CHECK(ha == b.simple_hypergraph(5));
    CHECK(ha.is_simple());
    CHECK_FALSE(ha.edges().empty());
  }
  for (int i = 0; i < 20; ++i) {
    const Graph g = a.connected_graph(8);
    CHECK(g.is_connected());
    CHECK(g == b.connected_graph(8));
  }
}

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.path_max_n = 7;
  cfg.path_stretch_n = 9;
  cfg.even_paths = {2, 4};
  cfg.moreover_max_n = 7;
  cfg.tadpole_n = {3, 4};
  cfg.tadpole_k = {1, 2};
  cfg.graph_order_cap = 4;
  cfg.union_order_cap = 3;
  cfg.pass_order_cap = 4;
  cfg.hypergraph_exhaustive = 3;
  cfg.hypergraph_samples = 20;
  cfg.random_graphs = 4;
  cfg.log_bound_max = 64;
  return cfg;
}

}  // namespace

TEST_CASE("path suite ids and statuses") {
  const auto results = check_paths(small_config());
  std::set<std::string> ids;
  for (const CheckResult& r : results) {
    ids.insert(r.id);
    CHECK(r.status == CheckStatus::kPass);
  }
  CHECK(ids.size() == results.size());
  CHECK(ids.count("paths/P_05/s-game") == 1);
  CHECK(ids.count("paths/P_09/s-game") == 1);
  CHECK(ids.count("paths/P_04/s-game") == 1);
  CHECK(ids.count("paths/P_07/s-game-even-distance-targets") == 1);
}

TEST_CASE("stretch tier can be turned off") {
  SuiteConfig cfg = small_config();
  cfg.stretch = false;
  for (const CheckResult& r : check_paths(cfg)) CHECK(r.id.rfind("paths/P_09", 0) != 0);
}

TEST_CASE("budget overruns") {
  SuiteConfig cfg = small_config();
  cfg.node_budget = 3;
  cfg.tadpole_n = {6};
  cfg.tadpole_k = {3};
  const Summary s = summarize(check_tadpoles(cfg));
  CHECK(s.fail > 0);
  CHECK(s.pass + s.fail + s.skipped > 0);

  cfg.path_max_n = 1;
  cfg.even_paths = {};
  const auto paths = check_paths(cfg);
  bool skipped = false;
  for (const CheckResult& r : paths) {
    if (r.status == CheckStatus::kSkippedBudget) {
      skipped = true;
      CHECK_FALSE(r.note.empty());
    }
  }
  CHECK(skipped);
}

TEST_CASE("every suite passes on a small grid") {
  const SuiteConfig cfg = small_config();
  for (const std::string& suite : suite_names()) {
    CAPTURE(suite);
    const auto results = run_suites({suite}, cfg);
    CHECK_FALSE(results.empty());
    const Summary s = summarize(results);
    CHECK(s.fail == 0);
    CHECK(s.skipped == 0);
  }
  CHECK_THROWS_AS(suite_jobs("nope", cfg), std::invalid_argument);
}

TEST_CASE("reports do not depend on the thread count") {
  SuiteConfig one = small_config();
  one.threads = 1;
  SuiteConfig four = one;
  four.threads = 4;
  const std::vector<std::string> suites{"paths", "tadpoles", "duality"};
  const auto a = run_suites(suites, one);
  const auto b = run_suites(suites, four);
  CHECK(json_report("x", one, a) == json_report("x", four, b));
  CHECK(csv_report(a) == csv_report(b));
}

TEST_CASE("report shapes") {
  SuiteConfig cfg = small_config();
  const auto results = check_log_bound(cfg);
  const auto doc = nlohmann::json::parse(json_report("log-bound", cfg, results));
  CHECK(doc["suite"] == "log-bound");
  CHECK(doc["config"]["log_bound_max"] == 64);
  REQUIRE(doc["results"].size() == results.size());
  CHECK(doc["results"][0]["status"] == "pass");
  CHECK_FALSE(doc["results"][0].contains("wall_seconds"));
  CHECK(doc["summary"]["fail"] == 0);

  cfg.record_time = true;
  CHECK(nlohmann::json::parse(json_report("log-bound", cfg, results))["results"][0].contains("wall_seconds"));

  const std::string csv = csv_report({{"a/b", "x \"y\"", "1", "2", CheckStatus::kFail, "", 7, 0}});
  CHECK(csv == "id,instance,expected,computed,status,nodes\n\"a/b\",\"x \"\"y\"\"\",\"1\",\"2\",fail,7\n");
}

TEST_CASE("describe") { CHECK(describe(path(3).graph) == "n=3 e=0-1,1-2"); }
