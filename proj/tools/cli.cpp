#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbd/families.hpp"
#include "mbd/solver.hpp"
#include "mbd/verify.hpp"
#include "play.hpp"

namespace mbd {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A graph family or a hypergraph read from a file.
struct Target {
  std::optional<LabeledFamily> family;
  Hypergraph board;
  std::string name;

  std::string label(Vertex v) const { return family ? family->label(v) : std::to_string(v); }
};

struct TargetArgs {
  std::string family;
  std::string graph_file;
  std::string hypergraph_file;

  void add_to(CLI::App* cmd, bool allow_hypergraph = true) {
    cmd->add_option("target", family, "Graph family, e.g. path:5, tadpole:4:1, grst:2:2:3, path:3+cycle:4");
    cmd->add_option("--graph-file", graph_file, "Graph in `p n` / `e u v` format");
    if (allow_hypergraph) cmd->add_option("--hypergraph-file", hypergraph_file, "Hypergraph in `h n m` format");
  }

  Target load() const {
    const int given = !family.empty() + !graph_file.empty() + !hypergraph_file.empty();
    if (given != 1) throw UsageError("give exactly one of: a family, --graph-file, --hypergraph-file");
    Target t;
    if (!hypergraph_file.empty()) {
      std::ifstream in(hypergraph_file);
      if (!in) throw UsageError("cannot read " + hypergraph_file);
      t.board = parse_hypergraph(in);
      t.name = hypergraph_file;
      return t;
    }
    if (!graph_file.empty()) {
      std::ifstream in(graph_file);
      if (!in) throw UsageError("cannot read " + graph_file);
      t.family = unlabeled(parse_graph(in), graph_file);
    } else {
      t.family = parse_family(family);
    }
    t.board = closed_neighborhood_hypergraph(t.family->graph);
    t.name = t.family->name;
    return t;
  }
};

Player parse_player(const std::string& s) {
  if (s == "maker" || s == "staller" || s == "M" || s == "S") return Player::kMaker;
  if (s == "breaker" || s == "dominator" || s == "B" || s == "D") return Player::kBreaker;
  throw UsageError("unknown player `" + s + "` (use maker/staller or breaker/dominator)");
}

std::string lower_name(Player p) { return p == Player::kMaker ? "maker" : "breaker"; }

nlohmann::ordered_json value_json(GameValue v) {
  nlohmann::ordered_json j;
  j["value"] = v.is_finite() ? nlohmann::ordered_json(v.moves()) : nlohmann::ordered_json(nullptr);
  j["finite"] = v.is_finite();
  return j;
}

std::uint64_t default_budget() {
  const char* env = std::getenv("MBD_NODE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultNodeBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError("MBD_NODE_BUDGET must be a positive integer");
  return v;
}

std::string set_string(const Target& t, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    out += (first ? "" : ", ") + t.label(v);
    first = false;
  }
  return out + "}";
}

void write_file_or_stdout(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write " + path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver and verification workbench for Maker-Breaker domination games", "mbd"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> nodes;
  int threads = 0;
  std::uint64_t seed = SuiteConfig{}.seed;
  app.add_option("--nodes", nodes, "Node budget per solve (default 1e8, or MBD_NODE_BUDGET)");
  app.add_option("--threads", threads, "Worker threads for verify (0 = all cores)");
  app.add_option("--seed", seed, "Seed for sampled instances");

  // solve
  CLI::App* solve_cmd = app.add_subcommand("solve", "Winning number w_X^Y of the Maker-Breaker game");
  TargetArgs solve_target;
  solve_target.add_to(solve_cmd);
  std::string counted = "maker";
  std::string first = "maker";
  bool maker_pass = false;
  bool breaker_pass = false;
  bool by_components = false;
  bool show_line = false;
  bool solve_json = false;
  solve_cmd->add_option("--counted", counted, "Player whose moves are counted: maker|breaker");
  solve_cmd->add_option("--first", first, "Player who moves first: maker|breaker");
  solve_cmd->add_flag("--maker-may-pass", maker_pass, "Maker may pass");
  solve_cmd->add_flag("--breaker-may-pass", breaker_pass, "Breaker may pass");
  solve_cmd->add_flag("--components", by_components, "Solve each component separately (maker/maker only)");
  solve_cmd->add_flag("--line", show_line, "Print the best move and an optimal line of play");
  solve_cmd->add_flag("--json", solve_json, "Machine-readable output");

  // values
  CLI::App* values_cmd = app.add_subcommand("values", "The four domination game numbers of a graph");
  TargetArgs values_target;
  values_target.add_to(values_cmd, false);
  bool values_json = false;
  values_cmd->add_flag("--json", values_json, "Machine-readable output");

  // generate
  CLI::App* generate_cmd = app.add_subcommand("generate", "Describe a generated graph and its landmarks");
  TargetArgs generate_target;
  generate_target.add_to(generate_cmd, false);

  // transversals
  CLI::App* tr_cmd = app.add_subcommand("transversals", "Minimal transversals (for graphs: minimal dominating sets)");
  TargetArgs tr_target;
  tr_target.add_to(tr_cmd);
  bool tr_raw = false;
  tr_cmd->add_flag("--raw", tr_raw, "Print in `h n m` format");

  // verify
  CLI::App* verify_cmd = app.add_subcommand("verify", "Replay every formula, bound and construction");
  std::vector<std::string> suites;
  std::string json_path;
  std::string csv_path;
  bool with_time = false;
  bool no_stretch = false;
  bool quiet = false;
  verify_cmd->add_option("--suite", suites, "Suites to run (repeatable; default all)")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--json", json_path, "Write the JSON report here (- for stdout)");
  verify_cmd->add_option("--csv", csv_path, "Write the CSV summary here (- for stdout)");
  verify_cmd->add_flag("--time", with_time, "Include wall times in reports");
  verify_cmd->add_flag("--no-stretch", no_stretch, "Skip stretch-tier instances");
  verify_cmd->add_flag("--quiet", quiet, "Only print the totals");

  // play
  CLI::App* play_cmd = app.add_subcommand("play", "Play the domination game against the engine");
  TargetArgs play_target;
  play_target.add_to(play_cmd, false);
  std::string as = "staller";
  std::string starts = "staller";
  play_cmd->add_option("--as", as, "Your role: staller|dominator");
  play_cmd->add_option("--first", starts, "Who starts: staller|dominator");

  // export
  CLI::App* export_cmd = app.add_subcommand("export", "Write a graph or its hypergraph");
  TargetArgs export_target;
  export_target.add_to(export_cmd);
  std::string format = "edge-list";
  std::string output;
  export_cmd->add_option("--format", format, "dot|edge-list|hypergraph")
      ->check(CLI::IsMember({"dot", "edge-list", "hypergraph"}));
  export_cmd->add_option("-o,--output", output, "Output path (default stdout)");

  std::vector<const char*> argv{"mbd"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    SolverOptions opts;
    opts.node_budget = nodes ? *nodes : default_budget();
    if (opts.node_budget == 0) throw UsageError("--nodes must be positive");
    Solver solver(opts);

    if (*solve_cmd) {
      const Target t = solve_target.load();
      GameSpec spec{parse_player(counted), parse_player(first), maker_pass, breaker_pass};
      const GameValue v = by_components ? solver.solve_with_components(t.board, spec) : solver.solve(t.board, spec);
      const std::uint64_t visited = solver.stats().nodes;
      std::optional<MoveChoice> best;
      std::vector<Vertex> line;
      if (show_line && !spec.has_passes()) {
        best = solver.best_move(t.board, spec);
        line = solver.principal_line(t.board, spec);
      }
      if (solve_json) {
        nlohmann::ordered_json j;
        j["target"] = t.name;
        j["counted"] = lower_name(spec.counted);
        j["first"] = lower_name(spec.first);
        j["maker_may_pass"] = spec.maker_may_pass;
        j["breaker_may_pass"] = spec.breaker_may_pass;
        const auto vj = value_json(v);
        j["value"] = vj["value"];
        j["finite"] = vj["finite"];
        j["nodes"] = visited;
        if (best) {
          j["best_move"] = t.label(best->vertex);
          nlohmann::ordered_json l = nlohmann::ordered_json::array();
          for (Vertex x : line) l.push_back(t.label(x));
          j["line"] = l;
        }
        out << j.dump(2) << "\n";
      } else {
        out << "board: " << t.name << " (" << t.board.universe().size() << " vertices, " << t.board.edge_count()
            << " edges)\n";
        out << "counted: " << lower_name(spec.counted) << ", first: " << lower_name(spec.first);
        if (spec.maker_may_pass) out << ", maker may pass";
        if (spec.breaker_may_pass) out << ", breaker may pass";
        out << "\nvalue: " << v.to_string() << "\n";
        if (best) {
          out << "best move: " << t.label(best->vertex) << "\nline:";
          for (Vertex x : line) out << " " << t.label(x);
          out << "\n";
        }
        out << "nodes: " << visited << "\n";
      }
      return kExitOk;
    }

    if (*values_cmd) {
      const Target t = values_target.load();
      const MbdValues v = mbd_values(t.family->graph, solver, true);
      if (values_json) {
        nlohmann::ordered_json j;
        j["target"] = t.name;
        j["order"] = t.family->graph.order();
        j["min_degree"] = t.family->graph.min_degree();
        j["gamma_smb"] = value_json(v.gamma_smb);
        j["gamma_smb_prime"] = value_json(v.gamma_smb_prime);
        j["gamma_mb"] = value_json(v.gamma_mb);
        j["gamma_mb_prime"] = value_json(v.gamma_mb_prime);
        out << j.dump(2) << "\n";
      } else {
        out << t.name << " (n=" << t.family->graph.order() << ", delta=" << t.family->graph.min_degree() << ")\n"
            << "gamma'_SMB = " << v.gamma_smb_prime.to_string() << "   Staller, S-game\n"
            << "gamma_SMB  = " << v.gamma_smb.to_string() << "   Staller, D-game\n"
            << "gamma_MB   = " << v.gamma_mb.to_string() << "   Dominator, D-game\n"
            << "gamma'_MB  = " << v.gamma_mb_prime.to_string() << "   Dominator, S-game\n";
      }
      return kExitOk;
    }

    if (*generate_cmd) {
      const Target t = generate_target.load();
      const Graph& g = t.family->graph;
      out << t.name << ": " << g.order() << " vertices, " << g.edge_count() << " edges, min degree "
          << g.min_degree() << (g.is_connected() ? ", connected" : ", disconnected") << "\n";
      out << "labels:";
      for (Vertex v = 0; v < g.order(); ++v) out << " " << v << "=" << t.label(v);
      out << "\n";
      for (const auto& [name, set] : t.family->landmarks) out << name << " = " << set_string(t, set) << "\n";
      return kExitOk;
    }

    if (*tr_cmd) {
      const Target t = tr_target.load();
      const Hypergraph tr = minimal_transversals(t.board);
      if (tr_raw) {
        write_hypergraph(out, tr);
      } else {
        out << tr.edge_count() << " minimal transversals, smallest size " << tr.min_edge_size() << "\n";
        for (VertexSet e : tr.edges()) out << set_string(t, e) << "\n";
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      SuiteConfig cfg;
      cfg.seed = seed;
      cfg.node_budget = opts.node_budget;
      cfg.threads = threads > 0 ? threads : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
      cfg.stretch = !no_stretch;
      cfg.record_time = with_time;
      const std::vector<CheckResult> results = run_suites(suites, cfg);
      const std::vector<std::string>& ran = suites.empty() ? suite_names() : suites;
      std::string label;
      for (const std::string& s : ran) label += (label.empty() ? "" : ",") + s;
      if (!json_path.empty()) write_file_or_stdout(json_path, json_report(label, cfg, results), out);
      if (!csv_path.empty()) write_file_or_stdout(csv_path, csv_report(results, with_time), out);
      const bool reports_on_stdout = json_path == "-" || csv_path == "-";
      std::ostream& log = reports_on_stdout ? err : out;
      if (!quiet) {
        for (const std::string& s : ran) {
          std::vector<CheckResult> part;
          for (const CheckResult& r : results) {
            if (r.id.compare(0, s.size() + 1, s + "/") == 0) part.push_back(r);
          }
          const Summary sum = summarize(part);
          log << s << ": " << sum.pass << " pass, " << sum.fail << " fail, " << sum.skipped << " skipped\n";
        }
        for (const CheckResult& r : results) {
          if (r.status == CheckStatus::kPass) continue;
          log << to_string(r.status) << " " << r.id << " [" << r.instance << "] expected " << r.expected
              << ", got " << r.computed << "\n";
        }
      }
      const Summary total = summarize(results);
      log << "total: " << total.pass << " pass, " << total.fail << " fail, " << total.skipped << " skipped\n";
      return total.fail == 0 ? kExitOk : kExitVerifyFailed;
    }

    if (*play_cmd) {
      Target t = play_target.load();
      PlaySession session(std::move(*t.family), parse_player(as), parse_player(starts), solver);
      session.run(in, out);
      return kExitOk;
    }

    if (*export_cmd) {
      const Target t = export_target.load();
      std::ostringstream text;
      if (format == "hypergraph") {
        write_hypergraph(text, t.board);
      } else if (!t.family) {
        throw UsageError("a hypergraph file can only be exported as --format hypergraph");
      } else if (format == "dot") {
        write_dot(text, *t.family);
      } else {
        write_edge_list(text, t.family->graph);
      }
      write_file_or_stdout(output, text.str(), out);
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mbd
