#include "cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mbd/families.hpp"
#include "play.hpp"

using namespace mbd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mbd_cli_test_" + name);
}

}  // namespace

TEST_CASE("values") {
  const Run p5 = run({"values", "path:5"});
  CHECK(p5.code == kExitOk);
  CHECK(has(p5.out, "gamma'_SMB = 3 "));
  CHECK(has(p5.out, "gamma_SMB  = inf "));

  const Run t = run({"values", "tadpole:4:1"});
  CHECK(has(t.out, "gamma'_SMB = 3 "));
  CHECK(has(t.out, "gamma_SMB  = inf "));

  const Run k3 = run({"values", "complete:3", "--json"});
  REQUIRE(k3.code == kExitOk);
  const auto j = nlohmann::json::parse(k3.out);
  CHECK(j["gamma_smb_prime"]["value"].is_null());
  CHECK(j["gamma_smb_prime"]["finite"] == false);
  CHECK(j["gamma_smb"]["finite"] == false);
  CHECK(j["gamma_mb"]["value"] == 1);
  CHECK(j["gamma_mb"]["finite"] == true);
}

TEST_CASE("solve") {
  const Run r = run({"solve", "path:3", "--counted", "breaker", "--first", "breaker", "--line"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "value: 1\n"));
  CHECK(has(r.out, "best move: v2\n"));

  const Run j = run({"solve", "path:5", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["value"] == 3);
  CHECK(doc["counted"] == "maker");

  const Run c = run({"solve", "path:3+path:5", "--components"});
  CHECK(has(c.out, "value: 2\n"));
  CHECK(run({"solve", "path:3", "--components", "--first", "breaker"}).code == kExitUsage);

  const Run pass = run({"solve", "path:3", "--maker-may-pass"});
  CHECK(has(pass.out, "maker may pass"));
  CHECK(has(pass.out, "value: 2\n"));
}

TEST_CASE("hypergraph and graph files") {
  const auto h = temp_file("h.txt");
  {
    std::ofstream f(h);
    f << "h 3 2\n0 1\n1 2\n";
  }
  const Run r = run({"solve", "--hypergraph-file", h.string()});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "value: 2\n"));
  const Run tr = run({"transversals", "--hypergraph-file", h.string()});
  CHECK(has(tr.out, "2 minimal transversals, smallest size 1\n{1}\n{0, 2}\n"));
  // values needs a graph
  CHECK(run({"values", "--hypergraph-file", h.string()}).code == kExitUsage);

  const auto g = temp_file("g.txt");
  {
    std::ofstream f(g);
    f << "p 3\ne 0 1\ne 1 2\n";
  }
  CHECK(has(run({"values", "--graph-file", g.string()}).out, "gamma'_SMB = 2 "));
  std::filesystem::remove(h);
  std::filesystem::remove(g);
}

TEST_CASE("usage errors and budget") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"solve"}).code == kExitUsage);
  CHECK(run({"solve", "path:3", "--graph-file", "x"}).code == kExitUsage);
  CHECK(run({"solve", "wheel:5"}).code == kExitUsage);
  CHECK(run({"solve", "path:3", "--counted", "nobody"}).code == kExitUsage);
  CHECK(run({"values", "--graph-file", "/nonexistent/file"}).code == kExitUsage);
  CHECK(run({"export", "path:3", "--format", "png"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  const Run b = run({"--nodes", "5", "values", "cycle:12"});
  CHECK(b.code == kExitBudget);
  CHECK(has(b.err, "error: "));
  CHECK(run({"values", "cycle:12", "--nodes", "5"}).code == kExitBudget);
}

TEST_CASE("generate and transversals") {
  const Run g = run({"generate", "tadpole:4:1"});
  CHECK(has(g.out, "T(4,1): 5 vertices, 5 edges, min degree 1, connected\n"));
  CHECK(has(g.out, "tail = {u1}\n"));
  const Run t = run({"transversals", "path:3"});
  CHECK(has(t.out, "2 minimal transversals, smallest size 1\n{v2}\n{v1, v3}\n"));
  const Run raw = run({"transversals", "path:3", "--raw"});
  CHECK(raw.out == "h 3 2\n1\n0 2\n");
}

TEST_CASE("export") {
  const Run dot = run({"export", "fprime:2", "--format", "dot"});
  CHECK(dot.code == kExitOk);
  int nodes = 0;
  std::istringstream lines(dot.out);
  for (std::string line; std::getline(lines, line);) nodes += has(line, "[label=") ? 1 : 0;
  CHECK(nodes == 7);

  CHECK(run({"export", "path:3", "--format", "hypergraph"}).out == "h 3 3\n0 1\n1 2\n0 1 2\n");
  CHECK(run({"export", "tadpole:3:1", "--format", "edge-list"}).out == "p 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\n");

  // Export and re-import gives the same graph.
  const auto path = temp_file("roundtrip.txt");
  for (const std::string spec : {"path:6", "cycle:5", "tadpole:5:2", "fprime:3", "grstc:2:3:3", "star2:3", "path:2+cycle:3"}) {
    REQUIRE(run({"export", spec, "--format", "edge-list", "-o", path.string()}).code == kExitOk);
    std::ifstream in(path);
    CHECK(parse_graph(in) == parse_family(spec).graph);
  }
  std::filesystem::remove(path);
  CHECK(run({"export", "path:3", "-o", "/nonexistent/dir/out.txt"}).code == kExitUsage);
}

TEST_CASE("verify subcommand") {
  const Run r = run({"--threads", "2", "verify", "--suite", "log-bound", "--suite", "paths", "--no-stretch"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "log-bound: 1 pass, 0 fail, 0 skipped\n"));
  CHECK(has(r.out, "total: "));

  const Run j = run({"verify", "--suite", "log-bound", "--json", "-", "--quiet"});
  CHECK(j.code == kExitOk);
  CHECK(nlohmann::json::parse(j.out)["summary"]["pass"] == 1);
  CHECK(has(j.err, "total: 1 pass, 0 fail, 0 skipped"));

  const Run c = run({"verify", "--suite", "log-bound", "--csv", "-", "--quiet"});
  CHECK(c.out == "id,instance,expected,computed,status,nodes\n\"log-bound/all-pairs\",\"1 <= a <= 4096, 2 <= b <= 4096\",\"0 violations\",\"0 violations\",pass,0\n");
}

TEST_CASE("play: Dominator takes the centre of P_3") {
  const Run r = run({"play", "path:3", "--as", "dominator", "--first", "dominator"}, "v2\n");
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "Dominator wins: {v2} is a dominating set, claimed in 1 moves\n"));
}

TEST_CASE("play: Staller on P_5 needs three moves") {
  const std::vector<std::string> scripts{"v1\nv2\nv3\nv4\nv5\n", "v3\nv2\nv4\nv1\nv5\n", "v2\nv4\nv1\nv3\nv5\n",
                                         "v5\nv4\nv3\nv2\nv1\n"};
  for (const std::string& script : scripts) {
    std::istringstream in(script);
    std::ostringstream out;
    Solver solver;
    PlaySession s(path(5), Player::kMaker, Player::kMaker, solver);
    s.run(in, out);
    if (s.finished() && s.winner() == Player::kMaker) {
      int staller_moves = 0;
      for (std::size_t i = 0; i < s.moves().size(); i += 2) ++staller_moves;
      CHECK(staller_moves >= 3);
    }
  }
}

TEST_CASE("play: engine as Dominator on P_5 can still lose to best play") {
  // The human follows the engine's own hints and wins in exactly three moves.
  Solver solver;
  PlaySession s(path(5), Player::kMaker, Player::kMaker, solver);
  std::ostringstream out;
  std::string transcript;
  while (!s.finished()) {
    std::istringstream hint_in("hint\n");
    std::ostringstream hint_out;
    s.run(hint_in, hint_out);
    const std::string text = hint_out.str();
    const auto at = text.rfind("hint: ");
    REQUIRE(at != std::string::npos);
    const std::string move = text.substr(at + 6, text.find(' ', at + 6) - at - 6);
    std::istringstream move_in(move + "\n");
    s.run(move_in, out);
    transcript += move + " ";
  }
  CAPTURE(transcript);
  CHECK(s.winner() == Player::kMaker);
  CHECK((s.moves().size() + 1) / 2 == 3);
}

TEST_CASE("play commands") {
  const Run hint = run({"play", "tadpole:4:1", "--as", "staller", "--first", "staller"}, "hint\nquit\n");
  CHECK(has(hint.out, "(Staller needs 3 more moves)"));
  CHECK(has(hint.out, "session ended"));

  const Run bad = run({"play", "path:3", "--as", "dominator", "--first", "dominator"}, "x9\nv2\n");
  CHECK(has(bad.out, "unknown vertex `x9`"));
  CHECK(has(bad.out, "Dominator wins"));

  const Run undo = run({"play", "path:3", "--as", "dominator", "--first", "dominator"}, "undo\nv1\nundo\nv2\n");
  CHECK(has(undo.out, "nothing to undo"));
  CHECK(has(undo.out, "undone"));
  CHECK(has(undo.out, "Dominator wins: {v2}"));

  const Run again = run({"play", "path:4", "--as", "staller", "--first", "staller"}, "v1\nv1\nshow\nhelp\n");
  CHECK(has(again.out, "v1 is already played"));
  CHECK(has(again.out, "open winning sets for Staller:"));
  CHECK(has(again.out, "session ended"));
}
