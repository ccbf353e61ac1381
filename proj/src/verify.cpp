#include "mbd/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "mbd/catalog.hpp"
#include "mbd/families.hpp"
#include "mbd/formulas.hpp"
#include "mbd/pairing.hpp"

namespace mbd {

namespace {

const GameSpec kSGame = GameSpec::of(Player::kMaker, Player::kMaker);
const GameSpec kDGame = GameSpec::of(Player::kMaker, Player::kBreaker);

std::string pad(long long v, int width) {
  std::string s = std::to_string(v);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  return s;
}

// Solver wrapper that adds up node counts over the solves of one job.
class Meter {
 public:
  explicit Meter(Solver& s) : solver_(s) {}

  GameValue solve(const Hypergraph& h, const GameSpec& spec) {
    const GameValue v = solver_.solve(h, spec);
    nodes_ += solver_.stats().nodes;
    return v;
  }
  GameValue s_game(const Graph& g) { return solve(closed_neighborhood_hypergraph(g), kSGame); }
  GameValue d_game(const Graph& g) { return solve(closed_neighborhood_hypergraph(g), kDGame); }
  GameValue restricted(const Hypergraph& h, const std::vector<std::size_t>& keep, const GameSpec& spec) {
    const GameValue v = solver_.solve_restricted(h, keep, spec);
    nodes_ += solver_.stats().nodes;
    return v;
  }

  /// Node count since the previous call.
  std::uint64_t take() { return std::exchange(nodes_, 0); }

 private:
  Solver& solver_;
  std::uint64_t nodes_ = 0;
};

CheckResult compare(std::string id, std::string instance, std::string expected, std::string computed,
                    std::uint64_t nodes) {
  CheckResult r;
  r.id = std::move(id);
  r.instance = std::move(instance);
  r.status = expected == computed ? CheckStatus::kPass : CheckStatus::kFail;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.nodes = nodes;
  return r;
}

CheckResult holds(std::string id, std::string instance, std::string claim, bool ok, std::string detail,
                  std::uint64_t nodes) {
  CheckResult r;
  r.id = std::move(id);
  r.instance = std::move(instance);
  r.expected = std::move(claim);
  r.computed = std::move(detail);
  r.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  r.nodes = nodes;
  return r;
}

std::string str(GameValue v) { return v.to_string(); }

std::string triple(int a, GameValue b, GameValue c) {
  return "(" + std::to_string(a) + ", " + str(b) + ", " + str(c) + ")";
}

// Index of edge `e` in h.edges(); the edge must be present.
std::size_t edge_index(const Hypergraph& h, VertexSet e) {
  const auto& edges = h.edges();
  const auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end()) throw std::logic_error("edge_index: edge not present");
  return static_cast<std::size_t>(it - edges.begin());
}

// ---------------------------------------------------------------- paths

std::vector<CheckJob> path_jobs(const SuiteConfig& cfg) {
  std::vector<CheckJob> jobs;
  auto add = [&](int n, bool stretch) {
    const bool moreover = n % 2 == 1 && n <= cfg.moreover_max_n;
    jobs.push_back({"paths/P_" + pad(n, 2), stretch, [n, moreover](Solver& s) {
                      Meter m(s);
                      const std::string id = "paths/P_" + pad(n, 2);
                      const std::string inst = "P_" + std::to_string(n);
                      const Graph g = path(n).graph;
                      const GameValue value = m.s_game(g);
                      std::vector<CheckResult> out;
                      out.push_back(compare(id + "/s-game", inst, str(path_gamma_smb_prime(n)), str(value),
                                            m.take()));
                      if (moreover) {
                        // Staller only aims at N[v1], N[v3], ..., N[vn] (ids 0, 2, ...).
                        const Hypergraph h = closed_neighborhood_hypergraph(g);
                        std::vector<std::size_t> keep;
                        for (Vertex v = 0; v < n; v += 2) keep.push_back(edge_index(h, g.closed_neighborhood(v)));
                        const GameValue r = m.restricted(h, keep, kSGame);
                        out.push_back(compare(id + "/s-game-even-distance-targets", inst, str(value), str(r),
                                              m.take()));
                      }
                      return out;
                    }});
  };
  for (int n = 1; n <= cfg.path_max_n; n += 2) add(n, false);
  for (int n : cfg.even_paths) add(n, false);
  if (cfg.stretch && cfg.path_stretch_n > cfg.path_max_n) add(cfg.path_stretch_n, true);
  return jobs;
}

// ------------------------------------------------------------- tadpoles

std::vector<std::pair<int, int>> tadpole_grid(const SuiteConfig& cfg) {
  std::vector<std::pair<int, int>> out;
  for (int n : cfg.tadpole_n) {
    for (int k : cfg.tadpole_k) {
      if (n + k <= cfg.tadpole_max_sum) out.emplace_back(n, k);
    }
  }
  return out;
}

std::string tadpole_id(int n, int k) { return "T(" + pad(n, 2) + "," + pad(k, 2) + ")"; }

std::vector<CheckJob> tadpole_jobs(const SuiteConfig& cfg) {
  std::vector<CheckJob> jobs;
  for (auto [n, k] : tadpole_grid(cfg)) {
    const std::string id = "tadpoles/" + tadpole_id(n, k);
    jobs.push_back({id, false, [n, k, id](Solver& s) {
                      Meter m(s);
                      const std::string inst = "T(" + std::to_string(n) + "," + std::to_string(k) + ")";
                      const Graph g = tadpole(n, k).graph;
                      const StallerValues want = tadpole_values({n, k});
                      std::vector<CheckResult> out;
                      const GameValue d = m.d_game(g);
                      out.push_back(compare(id + "/d-game", inst, str(want.gamma_smb), str(d), m.take()));
                      const GameValue sg = m.s_game(g);
                      out.push_back(compare(id + "/s-game", inst, str(want.gamma_smb_prime), str(sg), m.take()));
                      return out;
                    }});
  }
  return jobs;
}

// --------------------------------------------------------- constructions

std::vector<CheckResult> f_structure(int k) {
  std::vector<CheckResult> out;
  const std::string id = "fprime/F'_" + std::to_string(k);
  const std::string inst = "F_" + std::to_string(k) + ", F'_" + std::to_string(k);
  const LabeledFamily f = f_family(k);
  const LabeledFamily fp = f_prime(k);
  const std::string ks = std::to_string(k);
  const VertexSet x = f.landmarks.at("X_" + ks);
  const VertexSet y = f.landmarks.at("Y_" + ks);

  const int order = f.graph.order();
  out.push_back(compare(id + "/order-F", inst, std::to_string((1 << (k + 1)) - 1), std::to_string(order), 0));
  const int order_prime = k <= 2 ? order : order + k - 1;
  out.push_back(compare(id + "/order-F'", inst, std::to_string(order_prime), std::to_string(fp.graph.order()), 0));
  out.push_back(compare(id + "/X-size", inst, std::to_string(1 << k), std::to_string(x.size()), 0));

  bool x_deg = true;
  for (Vertex v : x) x_deg = x_deg && f.graph.degree(v) == k;
  out.push_back(holds(id + "/X-degree", inst, "every X_k vertex has degree k in F_k", x_deg,
                      x_deg ? "holds" : "violated", 0));

  // Y_k holds 2^(k-i) vertices of degree 2^i for i = 1..k-1.
  std::string want_deg;
  std::string got_deg;
  for (int i = 1; i <= k - 1; ++i) {
    int count = 0;
    for (Vertex v : y) count += f.graph.degree(v) == (1 << i) ? 1 : 0;
    want_deg += (i > 1 ? "," : "") + std::to_string(1 << (k - i));
    got_deg += (i > 1 ? "," : "") + std::to_string(count);
  }
  out.push_back(compare(id + "/Y-degrees", inst, want_deg, got_deg, 0));
  out.push_back(compare(id + "/Y-size", inst, std::to_string((1 << k) - 2), std::to_string(y.size()), 0));

  // Only the clique-augmented graphs (k >= 3) lift Y_k above degree k.
  if (k >= 3) {
    const VertexSet high = y | fp.landmarks.at("Y+_" + ks);
    bool high_ok = true;
    for (Vertex v : high) high_ok = high_ok && fp.graph.degree(v) > k;
    out.push_back(holds(id + "/Y-degree-above-k", inst, "deg > k on Y_k and Y+_k in F'_k", high_ok,
                        high_ok ? "holds" : "violated", 0));
  }
  out.push_back(compare(id + "/min-degree", inst, ks, std::to_string(fp.graph.min_degree()), 0));
  return out;
}

std::vector<CheckJob> fprime_jobs(const SuiteConfig& cfg) {
  std::vector<CheckJob> jobs;
  auto add = [&](int k, bool stretch) {
    const std::string id = "fprime/F'_" + std::to_string(k);
    jobs.push_back({id, stretch, [k, id](Solver& s) {
                      Meter m(s);
                      const std::string inst = "F'_" + std::to_string(k);
                      const Graph g = f_prime(k).graph;
                      const StallerValues want = f_prime_values(k);
                      std::vector<CheckResult> out = f_structure(k);
                      const GameValue sg = m.s_game(g);
                      out.push_back(compare(id + "/s-game", inst, str(want.gamma_smb_prime), str(sg), m.take()));
                      const GameValue d = m.d_game(g);
                      out.push_back(compare(id + "/d-game", inst, str(want.gamma_smb), str(d), m.take()));
                      return out;
                    }});
  };
  for (int k = 1; k <= cfg.fprime_max_k; ++k) add(k, false);
  if (cfg.stretch && cfg.fprime_stretch_k > cfg.fprime_max_k) add(cfg.fprime_stretch_k, true);
  return jobs;
}

std::vector<CheckJob> realization_jobs(const SuiteConfig& cfg) {
  std::vector<CheckJob> jobs;
  for (auto [r, s_, t] : cfg.triples) {
    for (bool connected : {false, true}) {
      const int s = s_;
      const std::string name = std::string(connected ? "G'" : "G") + "(" + std::to_string(r) + "," +
                               std::to_string(s) + "," + std::to_string(t) + ")";
      const std::string id = "realization/" + name;
      jobs.push_back({id, false, [r, s, t, connected, id, name](Solver& solver) {
                        Meter m(solver);
                        const Graph g = connected ? g_rst_connected(r, s, t).graph : g_rst(r, s, t).graph;
                        const RealizationTriple want = realization_triple(r, s, t);
                        const GameValue sg = m.s_game(g);
                        const GameValue d = m.d_game(g);
                        std::vector<CheckResult> out;
                        out.push_back(compare(id + "/triple", name,
                                              triple(want.delta_plus_one, want.gamma_smb_prime, want.gamma_smb),
                                              triple(g.min_degree() + 1, sg, d), m.take()));
                        if (connected) {
                          out.push_back(holds(id + "/connected", name, "connected", g.is_connected(),
                                              g.is_connected() ? "connected" : "disconnected", 0));
                        }
                        return out;
                      }});
    }
  }
  return jobs;
}

std::vector<CheckJob> sharpness_jobs(const SuiteConfig& cfg) {
  std::vector<CheckJob> jobs;
  auto add = [&](int variant, int k) {
    const std::string name = "S_" + std::to_string(k) + "^" + std::to_string(variant);
    const std::string id = "sharpness/" + name;
    jobs.push_back({id, false, [variant, k, id, name](Solver& s) {
                      Meter m(s);
                      const LabeledFamily f = variant == 1 ? subdivided_star_1(k) : subdivided_star_2(k);
                      const int n = f.graph.order();
                      std::vector<CheckResult> out;
                      const GameValue sg = m.s_game(f.graph);
                      out.push_back(compare(id + "/s-game", name, str(GameValue::finite(k + 1)), str(sg), m.take()));
                      out.push_back(compare(id + "/s-game-vs-half-order", name, std::to_string((n + 1) / 2),
                                            str(sg), 0));
                      // Adding an isolated vertex makes the D-game bound tight.
                      const Graph plus = disjoint_union(f.graph, Graph(1));
                      const GameValue d = m.d_game(plus);
                      out.push_back(compare(id + "/d-game-with-isolated-vertex", name + " + K_1",
                                            std::to_string(plus.order() / 2), str(d), m.take()));
                      return out;
                    }});
  };
  for (int k : cfg.star1_k) add(1, k);
  for (int k : cfg.star2_k) add(2, k);
  return jobs;
}

// ----------------------------------------------------------- catalogs

struct NamedGraph {
  std::string id;
  Graph graph;
};

std::vector<NamedGraph> inequality_graphs(const SuiteConfig& cfg) {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= cfg.graph_order_cap; ++n) {
    const auto graphs = connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      out.push_back({"c" + std::to_string(n) + "-" + pad(static_cast<long long>(i), 3), graphs[i]});
    }
  }
  Sampler sampler(cfg.seed);
  const int span = cfg.random_graph_max_order - cfg.random_graph_min_order + 1;
  for (int i = 0; i < cfg.random_graphs && span > 0; ++i) {
    const int n = cfg.random_graph_min_order + static_cast<int>(sampler.below(static_cast<std::uint64_t>(span)));
    out.push_back({"r-" + pad(i, 3), sampler.connected_graph(n)});
  }
  return out;
}

// --------------------------------------------------------- inequalities

std::vector<CheckResult> graph_inequalities(const NamedGraph& ng, Meter& m) {
  const Graph& g = ng.graph;
  const std::string id = "inequalities/" + ng.id;
  const std::string inst = describe(g);
  const int n = g.order();
  std::vector<CheckResult> out;

  const GameValue sg = m.s_game(g);
  const GameValue d = m.d_game(g);
  const int delta = g.min_degree();
  {
    const bool ok = GameValue::finite(delta + 1) <= sg && sg <= d;
    out.push_back(holds(id + "/min-degree-chain", inst, "delta+1 <= g' <= g", ok,
                        std::to_string(delta + 1) + " <= " + str(sg) + " <= " + str(d), m.take()));
  }
  {
    const bool ok = (sg.is_infinite() || sg.moves() <= (n + 1) / 2) && (d.is_infinite() || d.moves() <= n / 2);
    out.push_back(holds(id + "/half-order", inst, "finite g' <= ceil(n/2), finite g <= floor(n/2)", ok,
                        "g'=" + str(sg) + " g=" + str(d) + " n=" + std::to_string(n), 0));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!g.is_cut_vertex(v)) continue;
    const Graph rest = g.induced(g.vertices() - VertexSet::single(v));
    std::vector<GameValue> parts;
    for (VertexSet c : rest.component_sets()) parts.push_back(m.s_game(rest.induced(c)));
    std::sort(parts.begin(), parts.end());
    const GameValue bound = parts.at(1).plus(1);
    out.push_back(holds(id + "/cut-vertex-" + std::to_string(v), inst, "g'(G) <= g'(G_2)+1", sg <= bound,
                        str(sg) + " <= " + str(bound), m.take()));
  }
  for (Vertex u = 0; u < n; ++u) {
    if (!g.is_weak_support(u)) continue;
    Vertex leaf = -1;
    for (Vertex w : g.neighbors(u)) {
      if (g.is_leaf(w)) leaf = w;
    }
    const Graph smaller = g.induced(g.vertices() - VertexSet::single(u) - VertexSet::single(leaf));
    const GameValue sg2 = m.s_game(smaller);
    const GameValue d2 = m.d_game(smaller);
    const bool ok = sg.plus(-1) <= sg2 && sg2 <= sg && d2 <= d;
    out.push_back(holds(id + "/weak-support-" + std::to_string(u) + "-s-game", inst,
                        "g'(G)-1 <= g'(G') <= g'(G) and g(G') <= g(G)", ok,
                        str(sg.plus(-1)) + " <= " + str(sg2) + " <= " + str(sg) + "; " + str(d2) + " <= " + str(d),
                        m.take()));
    if (g.degree(u) == 2) {
      out.push_back(holds(id + "/weak-support-" + std::to_string(u) + "-d-game", inst, "g(G)-1 <= g(G')",
                          d.plus(-1) <= d2, str(d.plus(-1)) + " <= " + str(d2), 0));
    }
  }
  return out;
}

std::vector<CheckResult> union_check(const std::string& id, const Graph& a, const Graph& b, Meter& m) {
  const Graph g = disjoint_union(a, b);
  GameValue pa = m.s_game(a);
  GameValue pb = m.s_game(b);
  if (pb < pa) std::swap(pa, pb);
  const GameValue sg = m.s_game(g);
  const GameValue d = m.d_game(g);
  std::vector<CheckResult> out;
  const std::string inst = describe(g);
  out.push_back(compare(id + "/s-game-min-component", inst, str(pa), str(sg), m.take()));
  out.push_back(holds(id + "/d-game-between-components", inst, "g'(G_1) <= g(G) <= g'(G_2)", pa <= d && d <= pb,
                      str(pa) + " <= " + str(d) + " <= " + str(pb), 0));
  return out;
}

std::vector<CheckResult> no_skip_check(const std::string& id, const Graph& g, Meter& m) {
  const Hypergraph h = closed_neighborhood_hypergraph(g);
  std::vector<CheckResult> out;
  const std::string inst = describe(g);
  for (Player first : {Player::kMaker, Player::kBreaker}) {
    const std::string game = first == Player::kMaker ? "s-game" : "d-game";
    GameSpec plain = GameSpec::of(Player::kMaker, first);
    GameSpec maker_pass = plain;
    maker_pass.maker_may_pass = true;
    GameSpec breaker_pass = plain;
    breaker_pass.breaker_may_pass = true;
    const GameValue base = m.solve(h, plain);
    const GameValue with_maker = m.solve(h, maker_pass);
    const GameValue with_breaker = m.solve(h, breaker_pass);
    out.push_back(compare(id + "/" + game + "-staller-may-pass", inst, str(base), str(with_maker), m.take()));
    out.push_back(holds(id + "/" + game + "-dominator-may-pass", inst, "value with passes <= plain value",
                        with_breaker <= base, str(with_breaker) + " <= " + str(base), 0));
  }
  return out;
}

std::vector<CheckJob> inequality_jobs(const SuiteConfig& cfg) {
  std::vector<CheckJob> jobs;
  for (const NamedGraph& ng : inequality_graphs(cfg)) {
    jobs.push_back({"inequalities/" + ng.id, false, [ng](Solver& s) {
                      Meter m(s);
                      return graph_inequalities(ng, m);
                    }});
  }
  std::vector<NamedGraph> small;
  for (int n = 1; n <= cfg.union_order_cap; ++n) {
    const auto graphs = connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      small.push_back({"c" + std::to_string(n) + "-" + pad(static_cast<long long>(i), 3), graphs[i]});
    }
  }
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      const std::string id = "inequalities/union/" + small[i].id + "+" + small[j].id;
      jobs.push_back({id, false, [id, a = small[i].graph, b = small[j].graph](Solver& s) {
                        Meter m(s);
                        return union_check(id, a, b, m);
                      }});
    }
  }
  for (int n = 1; n <= cfg.pass_order_cap; ++n) {
    const auto graphs = all_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const std::string id = "inequalities/no-skip/g" + std::to_string(n) + "-" + pad(static_cast<long long>(i), 3);
      jobs.push_back({id, false, [id, g = graphs[i]](Solver& s) {
                        Meter m(s);
                        return no_skip_check(id, g, m);
                      }});
    }
  }
  return jobs;
}

// -------------------------------------------------------------- duality

std::string role_switch(const Hypergraph& h, Meter& m, bool& ok) {
  const Hypergraph tr = minimal_transversals(h);
  const Player M = Player::kMaker;
  const Player B = Player::kBreaker;
  // (counted, first) on H against the switched roles on Tr(H).
  const std::array<std::pair<GameSpec, GameSpec>, 4> pairs{{
      {GameSpec::of(M, M), GameSpec::of(B, B)},
      {GameSpec::of(M, B), GameSpec::of(B, M)},
      {GameSpec::of(B, B), GameSpec::of(M, M)},
      {GameSpec::of(B, M), GameSpec::of(M, B)},
  }};
  ok = true;
  std::string detail;
  for (const auto& [on_h, on_tr] : pairs) {
    const GameValue a = m.solve(h, on_h);
    const GameValue b = m.solve(tr, on_tr);
    ok = ok && a == b;
    detail += (detail.empty() ? "" : " ") + str(a) + "=" + str(b);
  }
  return detail;
}

std::vector<CheckResult> hypergraph_duality(const std::string& id, const Hypergraph& h, Meter& m) {
  std::vector<CheckResult> out;
  const std::string inst = h.to_string();
  const Hypergraph twice = minimal_transversals(minimal_transversals(h));
  const Hypergraph simple = simplify(h);
  out.push_back(compare(id + "/double-transversal", inst, simple.to_string(), twice.to_string(), 0));
  out.push_back(compare(id + "/transversals-of-simplified", inst, minimal_transversals(h).to_string(),
                        minimal_transversals(simple).to_string(), 0));
  bool ok = false;
  const std::string detail = role_switch(h, m, ok);
  out.push_back(holds(id + "/role-switch", inst, "w_M^M=w_B^B(Tr) w_M^B=w_B^M(Tr) w_B^B=w_M^M(Tr) w_B^M=w_M^B(Tr)", ok,
                      detail, m.take()));
  return out;
}

std::vector<CheckJob> duality_jobs(const SuiteConfig& cfg) {
  std::vector<CheckJob> jobs;
  jobs.push_back({"duality/catalog", false, [cfg](Solver&) {
                    std::string want_c;
                    std::string got_c;
                    std::string want_a;
                    std::string got_a;
                    const int connected_known[] = {1, 1, 2, 6, 21, 112, 853};
                    const int all_known[] = {1, 2, 4, 11, 34, 156, 1044};
                    for (int n = 1; n <= std::min(cfg.graph_order_cap, 7); ++n) {
                      const char* sep = n > 1 ? "," : "";
                      want_c += sep + std::to_string(connected_known[n - 1]);
                      got_c += sep + std::to_string(connected_graphs(n).size());
                      want_a += sep + std::to_string(all_known[n - 1]);
                      got_a += sep + std::to_string(all_graphs(n).size());
                    }
                    return std::vector<CheckResult>{
                        compare("duality/catalog/connected-counts", "connected graphs by order", want_c, got_c, 0),
                        compare("duality/catalog/graph-counts", "graphs by order", want_a, got_a, 0)};
                  }});
  for (int n = 1; n <= cfg.hypergraph_exhaustive; ++n) {
    const auto family = simple_hypergraphs(n);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const std::string id = "duality/h" + std::to_string(n) + "-" + pad(static_cast<long long>(i), 4);
      jobs.push_back({id, false, [id, h = family[i]](Solver& s) {
                        Meter m(s);
                        return hypergraph_duality(id, h, m);
                      }});
    }
  }
  Sampler sampler(cfg.seed);
  for (int i = 0; i < cfg.hypergraph_samples; ++i) {
    const std::string id = "duality/s" + std::to_string(cfg.hypergraph_sample_order) + "-" + pad(i, 4);
    jobs.push_back({id, false, [id, h = sampler.simple_hypergraph(cfg.hypergraph_sample_order)](Solver& s) {
                      Meter m(s);
                      return hypergraph_duality(id, h, m);
                    }});
  }
  for (int n = 1; n <= cfg.graph_order_cap; ++n) {
    const auto graphs = connected_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const std::string id = "duality/c" + std::to_string(n) + "-" + pad(static_cast<long long>(i), 3);
      jobs.push_back({id, false, [id, g = graphs[i]](Solver&) {
                        const Hypergraph h = closed_neighborhood_hypergraph(g);
                        const Hypergraph d = minimal_dominating_sets(g);
                        const std::string inst = describe(g);
                        return std::vector<CheckResult>{
                            compare(id + "/transversals-of-neighborhoods", inst, d.to_string(),
                                    minimal_transversals(h).to_string(), 0),
                            compare(id + "/transversals-of-dominating-sets", inst, simplify(h).to_string(),
                                    minimal_transversals(d).to_string(), 0)};
                      }});
    }
  }
  return jobs;
}

// ----------------------------------------------------------- conjecture

std::vector<CheckJob> conjecture_jobs(const SuiteConfig& cfg) {
  const std::vector<NamedGraph> graphs = inequality_graphs(cfg);
  CheckJob job{"conjecture", false, [graphs](Solver& s) {
                 Meter m(s);
                 int tested_s = 0;
                 int tested_d = 0;
                 std::string bad_s;
                 std::string bad_d;
                 for (const NamedGraph& ng : graphs) {
                   const Graph& g = ng.graph;
                   const int n = g.order();
                   const int delta = g.min_degree();
                   const GameValue sg = m.s_game(g);
                   const GameValue d = m.d_game(g);
                   if (sg.is_finite()) {
                     ++tested_s;
                     if (sg.moves() > (n + 1) / 2 - delta + 1) bad_s += " " + ng.id + "(" + describe(g) + ")";
                   }
                   if (d.is_finite()) {
                     ++tested_d;
                     if (d.moves() > n / 2 - delta + 1) bad_d += " " + ng.id + "(" + describe(g) + ")";
                   }
                 }
                 const std::uint64_t nodes = m.take();
                 const std::string inst = std::to_string(graphs.size()) + " connected graphs";
                 auto verdict = [](int tested, const std::string& bad) {
                   return bad.empty() ? "consistent on " + std::to_string(tested) + " graphs with finite value"
                                      : "counterexamples:" + bad;
                 };
                 return std::vector<CheckResult>{
                     holds("conjecture/s-game", inst, "finite g' <= ceil(n/2) - delta + 1", bad_s.empty(),
                           verdict(tested_s, bad_s), nodes),
                     holds("conjecture/d-game", inst, "finite g <= floor(n/2) - delta + 1", bad_d.empty(),
                           verdict(tested_d, bad_d), 0)};
               }};
  return {job};
}

// -------------------------------------------------------------- pairing

std::vector<CheckResult> pairing_check(const std::string& id, const std::string& inst, const Graph& g,
                                       bool expect_matching) {
  // The solver runs without its pairing pruning so the two sides stay independent.
  SolverOptions opts;
  opts.pairing_oracle = false;
  Solver solver(opts);
  Meter m(solver);
  std::vector<CheckResult> out;
  const auto cert = find_pairing_certificate(g, VertexSet(), VertexSet());
  const std::string found = cert ? "found" : "none";
  out.push_back(compare(id + "/certificate", inst, expect_matching ? "found" : "none", found, 0));
  if (cert) {
    const PairingVerdict verdict = check_pairing_certificate(g, *cert);
    out.push_back(compare(id + "/certificate-valid", inst, std::string(to_string(PairingVerdict::kValid)),
                          std::string(to_string(verdict)), 0));
    const GameValue sg = m.s_game(g);
    const GameValue d = m.d_game(g);
    out.push_back(compare(id + "/s-game", inst, "inf", str(sg), m.take()));
    out.push_back(compare(id + "/d-game", inst, "inf", str(d), m.take()));
  }
  return out;
}

std::vector<CheckJob> pairing_jobs(const SuiteConfig& cfg) {
  std::vector<CheckJob> jobs;
  for (int n : cfg.even_paths) {
    const std::string id = "pairing/P_" + pad(n, 2);
    jobs.push_back({id, false, [id, n](Solver&) {
                      return pairing_check(id, "P_" + std::to_string(n), path(n).graph, true);
                    }});
  }
  for (int n : cfg.pairing_cycles) {
    const std::string id = "pairing/C_" + pad(n, 2);
    jobs.push_back({id, false, [id, n](Solver&) {
                      return pairing_check(id, "C_" + std::to_string(n), cycle(n).graph, n % 2 == 0);
                    }});
  }
  // Every grid tadpole: a perfect matching exists exactly when n and k have
  // the same parity, and then Dominator wins both games.
  for (auto [n, k] : tadpole_grid(cfg)) {
    const std::string id = "pairing/" + tadpole_id(n, k);
    jobs.push_back({id, false, [id, n = n, k = k](Solver&) {
                      return pairing_check(id, "T(" + std::to_string(n) + "," + std::to_string(k) + ")",
                                           tadpole(n, k).graph, (n - k) % 2 == 0);
                    }});
  }
  return jobs;
}

// ------------------------------------------------------------- log bound

std::vector<CheckJob> log_bound_jobs(const SuiteConfig& cfg) {
  const std::uint64_t limit = cfg.log_bound_max;
  return {{"log-bound", false, [limit](Solver&) {
             std::uint64_t violations = 0;
             std::string first;
             for (std::uint64_t a = 1; a <= limit; ++a) {
               for (std::uint64_t b = 2; b <= limit; ++b) {
                 if (!log_bound_holds(a, b)) {
                   if (violations++ == 0) first = " first at a=" + std::to_string(a) + " b=" + std::to_string(b);
                 }
               }
             }
             const std::string inst = "1 <= a <= " + std::to_string(limit) + ", 2 <= b <= " + std::to_string(limit);
             return std::vector<CheckResult>{compare("log-bound/all-pairs", inst, "0 violations",
                                                     std::to_string(violations) + " violations" + first, 0)};
           }}};
}

std::vector<CheckResult> run_named(const std::vector<std::string>& names, const SuiteConfig& cfg) {
  return run_suites(names, cfg);
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkippedBudget:
      return "skipped-budget";
  }
  return "?";
}

std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.order()) + " e=";
  bool first = true;
  for (auto [u, v] : g.edge_list()) {
    if (!first) s += ",";
    s += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paths",        "tadpoles", "fprime",     "realization",
                                              "sharpness",    "duality",  "inequalities", "conjecture",
                                              "pairing",      "log-bound"};
  return names;
}

std::vector<CheckJob> suite_jobs(const std::string& suite, const SuiteConfig& cfg) {
  if (suite == "paths") return path_jobs(cfg);
  if (suite == "tadpoles") return tadpole_jobs(cfg);
  if (suite == "fprime") return fprime_jobs(cfg);
  if (suite == "realization") return realization_jobs(cfg);
  if (suite == "sharpness") return sharpness_jobs(cfg);
  if (suite == "duality") return duality_jobs(cfg);
  if (suite == "inequalities") return inequality_jobs(cfg);
  if (suite == "conjecture") return conjecture_jobs(cfg);
  if (suite == "pairing") return pairing_jobs(cfg);
  if (suite == "log-bound") return log_bound_jobs(cfg);
  throw std::invalid_argument("unknown suite `" + suite + "`");
}

std::vector<CheckResult> run_jobs(std::vector<CheckJob> jobs, const SuiteConfig& cfg) {
  std::vector<std::vector<CheckResult>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const CheckJob& job = jobs[i];
      SolverOptions opts;
      opts.node_budget = cfg.node_budget;
      Solver solver(opts);
      const auto start = std::chrono::steady_clock::now();
      try {
        slots[i] = job.run(solver);
      } catch (const BudgetExceeded& e) {
        CheckResult r;
        r.id = job.name + "/budget";
        r.instance = job.name;
        r.expected = "solved within " + std::to_string(cfg.node_budget) + " nodes";
        r.computed = "value in [" + e.lower().to_string() + ", " + e.upper().to_string() + "]";
        r.status = job.stretch ? CheckStatus::kSkippedBudget : CheckStatus::kFail;
        r.note = e.what();
        r.nodes = e.nodes();
        slots[i] = {r};
      } catch (const std::exception& e) {
        CheckResult r;
        r.id = job.name + "/error";
        r.instance = job.name;
        r.expected = "no error";
        r.computed = e.what();
        r.status = CheckStatus::kFail;
        slots[i] = {r};
      }
      if (cfg.record_time) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (CheckResult& r : slots[i]) r.wall_seconds = secs / static_cast<double>(slots[i].size());
      }
    }
  };
  const int wanted = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  const int threads = std::max(1, std::min<int>(wanted, static_cast<int>(jobs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::vector<CheckResult> out;
  for (auto& s : slots) {
    for (CheckResult& r : s) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return out;
}

std::vector<CheckResult> run_suites(const std::vector<std::string>& suites, const SuiteConfig& cfg) {
  const std::vector<std::string>& names = suites.empty() ? suite_names() : suites;
  std::vector<CheckJob> jobs;
  for (const std::string& name : names) {
    for (CheckJob& j : suite_jobs(name, cfg)) jobs.push_back(std::move(j));
  }
  return run_jobs(std::move(jobs), cfg);
}

std::vector<CheckResult> check_paths(const SuiteConfig& cfg) { return run_named({"paths"}, cfg); }
std::vector<CheckResult> check_tadpoles(const SuiteConfig& cfg) { return run_named({"tadpoles"}, cfg); }
std::vector<CheckResult> check_constructions(const SuiteConfig& cfg) {
  return run_named({"fprime", "realization", "sharpness"}, cfg);
}
std::vector<CheckResult> check_inequalities(const SuiteConfig& cfg) { return run_named({"inequalities"}, cfg); }
std::vector<CheckResult> check_duality(const SuiteConfig& cfg) { return run_named({"duality"}, cfg); }
std::vector<CheckResult> probe_conjecture(const SuiteConfig& cfg) { return run_named({"conjecture"}, cfg); }
std::vector<CheckResult> check_pairing(const SuiteConfig& cfg) { return run_named({"pairing"}, cfg); }
std::vector<CheckResult> check_log_bound(const SuiteConfig& cfg) { return run_named({"log-bound"}, cfg); }

Summary summarize(const std::vector<CheckResult>& results) {
  Summary s;
  for (const CheckResult& r : results) {
    switch (r.status) {
      case CheckStatus::kPass:
        ++s.pass;
        break;
      case CheckStatus::kFail:
        ++s.fail;
        break;
      case CheckStatus::kSkippedBudget:
        ++s.skipped;
        break;
    }
  }
  return s;
}

std::string json_report(const std::string& suite, const SuiteConfig& cfg, const std::vector<CheckResult>& results) {
  using nlohmann::ordered_json;
  ordered_json config;
  config["path_max_n"] = cfg.path_max_n;
  config["path_stretch_n"] = cfg.path_stretch_n;
  config["even_paths"] = cfg.even_paths;
  config["moreover_max_n"] = cfg.moreover_max_n;
  config["tadpole_n"] = cfg.tadpole_n;
  config["tadpole_k"] = cfg.tadpole_k;
  config["tadpole_max_sum"] = cfg.tadpole_max_sum;
  config["fprime_max_k"] = cfg.fprime_max_k;
  config["fprime_stretch_k"] = cfg.fprime_stretch_k;
  config["triples"] = cfg.triples;
  config["star1_k"] = cfg.star1_k;
  config["star2_k"] = cfg.star2_k;
  config["graph_order_cap"] = cfg.graph_order_cap;
  config["union_order_cap"] = cfg.union_order_cap;
  config["pass_order_cap"] = cfg.pass_order_cap;
  config["hypergraph_exhaustive"] = cfg.hypergraph_exhaustive;
  config["hypergraph_sample_order"] = cfg.hypergraph_sample_order;
  config["hypergraph_samples"] = cfg.hypergraph_samples;
  config["random_graphs"] = cfg.random_graphs;
  config["random_graph_orders"] = {cfg.random_graph_min_order, cfg.random_graph_max_order};
  config["pairing_cycles"] = cfg.pairing_cycles;
  config["log_bound_max"] = cfg.log_bound_max;
  config["seed"] = cfg.seed;
  config["node_budget"] = cfg.node_budget;
  config["stretch"] = cfg.stretch;

  ordered_json rows = ordered_json::array();
  for (const CheckResult& r : results) {
    ordered_json row;
    row["id"] = r.id;
    row["instance"] = r.instance;
    row["expected"] = r.expected;
    row["computed"] = r.computed;
    row["status"] = std::string(to_string(r.status));
    if (!r.note.empty()) row["note"] = r.note;
    row["nodes"] = r.nodes;
    if (cfg.record_time) row["wall_seconds"] = r.wall_seconds;
    rows.push_back(std::move(row));
  }
  const Summary s = summarize(results);
  ordered_json report;
  report["suite"] = suite;
  report["config"] = std::move(config);
  report["results"] = std::move(rows);
  report["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
  return report.dump(2) + "\n";
}

std::string csv_report(const std::vector<CheckResult>& results, bool with_time) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "id,instance,expected,computed,status,nodes" << (with_time ? ",wall_seconds" : "") << "\n";
  for (const CheckResult& r : results) {
    out << quote(r.id) << ',' << quote(r.instance) << ',' << quote(r.expected) << ',' << quote(r.computed) << ','
        << to_string(r.status) << ',' << r.nodes;
    if (with_time) out << ',' << r.wall_seconds;
    out << "\n";
  }
  return out.str();
}

}  // namespace mbd
