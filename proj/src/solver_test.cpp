#include "mbd/solver.hpp"

#include <doctest.h>

#include "mbd/catalog.hpp"
#include "mbd/families.hpp"
#include "reference.hpp"

using namespace mbd;

namespace {

constexpr Player M = Player::kMaker;
constexpr Player B = Player::kBreaker;

const GameSpec kMM = GameSpec::of(M, M);
const GameSpec kMB = GameSpec::of(M, B);
const GameSpec kBM = GameSpec::of(B, M);
const GameSpec kBB = GameSpec::of(B, B);

GameValue fin(int k) { return GameValue::finite(k); }
const GameValue kInf = GameValue::infinite();

Hypergraph hg(const LabeledFamily& f) { return closed_neighborhood_hypergraph(f.graph); }

std::vector<GameSpec> all_specs() {
  std::vector<GameSpec> out;
  for (Player c : {M, B}) {
    for (Player f : {M, B}) {
      out.push_back(GameSpec::of(c, f));
      out.push_back({c, f, true, false});
      out.push_back({c, f, false, true});
    }
  }
  return out;
}

std::size_t edge_index(const Hypergraph& h, VertexSet e) {
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (h.edges()[i] == e) return i;
  }
  FAIL("edge not found");
  return 0;
}

// Places b's vertices after a's.
Hypergraph disjoint(const Hypergraph& a, int na, const Hypergraph& b, int nb) {
  std::vector<VertexSet> edges = a.edges();
  for (VertexSet e : b.edges()) edges.emplace_back(e.bits() << na);
  return Hypergraph::on_range(na + nb, edges);
}

}  // namespace

TEST_CASE("solve examples") {
  const Hypergraph single = Hypergraph::on_range(1, {{0}});
  CHECK(solve(single, kMM) == fin(1));
  CHECK(solve(single, kMB) == kInf);
  CHECK(solve(hg(path(3)), kMM) == fin(2));
  CHECK(solve(hg(path(3)), kBB) == fin(1));
  CHECK(solve(hg(cycle(4)), kMM) == kInf);
  CHECK(solve(Hypergraph::on_range(4, {{0, 1}, {2}, {3}}), kMM) == fin(1));
  CHECK_THROWS_AS(solve(Hypergraph::on_range(2, {VertexSet()}), kMM), std::invalid_argument);
}

TEST_CASE("empty family is a Breaker win") {
  const Hypergraph none = Hypergraph::on_range(3, {});
  CHECK(solve(none, kMM) == kInf);
  CHECK(solve(none, kBM) == fin(0));
}

TEST_CASE("agrees with plain minimax on small boards") {
  const auto specs = all_specs();
  Solver solver;
  for (int n = 1; n <= 4; ++n) {
    for (const Hypergraph& h : simple_hypergraphs(n)) {
      for (const GameSpec& spec : specs) {
        CAPTURE(h.to_string());
        CHECK(solver.solve(h, spec) == reference::game_value(h, spec));
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const Hypergraph h = closed_neighborhood_hypergraph(g);
      for (const GameSpec& spec : specs) {
        CAPTURE(h.to_string());
        CHECK(solver.solve(h, spec) == reference::game_value(h, spec));
      }
    }
  }
}

TEST_CASE("the pairing oracle never changes a value") {
  Solver with;
  Solver without(SolverOptions{.pairing_oracle = false});
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const Hypergraph h = closed_neighborhood_hypergraph(g);
      for (const GameSpec& spec : {kMM, kMB, kBM, kBB}) CHECK(with.solve(h, spec) == without.solve(h, spec));
    }
  }
}

TEST_CASE("best move") {
  Solver solver;
  const MoveChoice a = solver.best_move(Hypergraph::on_range(1, {{0}}), kMM);
  CHECK(a.vertex == 0);
  CHECK(a.value == fin(1));

  const MoveChoice centre = solver.best_move(hg(path(3)), kMB);
  CHECK(centre.vertex == 1);
  CHECK(centre.value == kInf);

  CHECK(solver.best_move(hg(path(5)), kMM).value == fin(3));
  CHECK_THROWS_AS(solver.best_move(Hypergraph::on_range(2, {}), kMM), std::invalid_argument);
}

namespace {

// Follows best_move for the winner against every reply of the loser and
// returns the largest number of moves the counted player made.
int worst_case_count(Solver& solver, const Hypergraph& h, GameSpec spec, Player winner, int so_far) {
  if (h.has_empty_edge() || h.edges().empty()) return so_far;
  auto play = [&](Vertex v) {
    return spec.first == M ? shrink(h, VertexSet::single(v)) : delete_vertices(h, VertexSet::single(v));
  };
  const int add = spec.first == spec.counted ? 1 : 0;
  GameSpec next = spec;
  next.first = other(spec.first);
  if (spec.first == winner) {
    return worst_case_count(solver, play(solver.best_move(h, spec).vertex), next, winner, so_far + add);
  }
  int worst = so_far;
  for (Vertex v : h.support()) worst = std::max(worst, worst_case_count(solver, play(v), next, winner, so_far + add));
  return worst;
}

}  // namespace

TEST_CASE("best move realizes the value against every reply") {
  Solver solver;
  for (const LabeledFamily& f : {path(5), path(7), tadpole(4, 1), f_prime(2), subdivided_star_1(3)}) {
    const Hypergraph h = hg(f);
    for (const GameSpec& spec : {kMM, kMB, kBM, kBB}) {
      const GameValue v = solver.solve(h, spec);
      if (v.is_infinite()) continue;
      CAPTURE(f.name);
      CHECK(worst_case_count(solver, h, spec, spec.counted, 0) == v.moves());
    }
  }
}

TEST_CASE("principal line replays to the value") {
  Solver solver;
  const Hypergraph h = hg(path(5));
  const auto line = solver.principal_line(h, kMM);
  CHECK((line.size() + 1) / 2 == 3);
  Hypergraph cur = h;
  Player turn = M;
  for (Vertex v : line) {
    cur = turn == M ? shrink(cur, VertexSet::single(v)) : delete_vertices(cur, VertexSet::single(v));
    turn = other(turn);
  }
  CHECK(cur.has_empty_edge());
}

TEST_CASE("one-step recursion holds") {
  Solver solver;
  Sampler sampler(3);
  for (int i = 0; i < 150; ++i) {
    const Hypergraph h = sampler.simple_hypergraph(5);
    // Maker to move: min over v of 1 + value after his move.
    GameValue best = kInf;
    for (Vertex v : h.support()) {
      const Hypergraph after = shrink(h, VertexSet::single(v));
      best = std::min(best, after.has_empty_edge() ? fin(1) : solver.solve(after, kMB).plus(1));
    }
    CHECK(solver.solve(h, kMM) == best);
    // Breaker to move: max over v of the value after her move.
    GameValue worst = fin(0);
    for (Vertex v : h.support()) {
      const Hypergraph after = delete_vertices(h, VertexSet::single(v));
      worst = std::max(worst, after.edges().empty() ? kInf : solver.solve(after, kMM));
    }
    CHECK(solver.solve(h, kMB) == worst);
  }
}

TEST_CASE("simplification invariance") {
  Solver solver;
  Sampler sampler(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<VertexSet> edges;
    const int m = 1 + static_cast<int>(sampler.below(7));
    for (int j = 0; j < m; ++j) edges.emplace_back(1 + sampler.below(63));
    const Hypergraph h = Hypergraph::on_range(6, edges);
    for (const GameSpec& spec : {kMM, kMB, kBM, kBB}) CHECK(solver.solve(h, spec) == solver.solve(simplify(h), spec));
  }
}

TEST_CASE("more or smaller edges never hurt Maker") {
  Solver solver;
  Sampler sampler(9);
  for (int i = 0; i < 200; ++i) {
    const Hypergraph h = sampler.simple_hypergraph(5);
    std::vector<VertexSet> more = h.edges();
    more.emplace_back(1 + sampler.below(31));
    const Hypergraph added = Hypergraph::on_range(5, more);

    std::vector<VertexSet> smaller = h.edges();
    VertexSet& e = smaller[sampler.below(smaller.size())];
    if (e.size() > 1) e = e - VertexSet::single(e.min());
    const Hypergraph shrunk = Hypergraph::on_range(5, smaller);

    for (const GameSpec& spec : {kMM, kMB}) {
      const GameValue base = solver.solve(h, spec);
      CHECK(solver.solve(added, spec) <= base);
      CHECK(solver.solve(shrunk, spec) <= base);
    }
  }
}

TEST_CASE("components") {
  Solver solver;
  const Hypergraph p3 = hg(path(3));
  const Hypergraph p4 = hg(path(4));
  const Hypergraph p5 = hg(path(5));
  CHECK(solver.solve_with_components(disjoint(p3, 3, p5, 5), kMM) == fin(2));
  CHECK(solver.solve_with_components(disjoint(p4, 4, p3, 3), kMM) == fin(2));
  CHECK(solver.solve_with_components(p5, kMM) == solver.solve(p5, kMM));
  CHECK_THROWS_AS(solver.solve_with_components(p5, kMB), std::invalid_argument);

  // Both clauses on two-component unions of small hypergraphs.
  Sampler sampler(13);
  for (int i = 0; i < 150; ++i) {
    Hypergraph a = sampler.simple_hypergraph(3);
    Hypergraph b = sampler.simple_hypergraph(4);
    GameValue va = solver.solve(a, kMM);
    GameValue vb = solver.solve(b, kMM);
    const Hypergraph u = disjoint(a, 3, b, 4);
    CHECK(solver.solve_with_components(u, kMM) == solver.solve(u, kMM));
    if (vb < va) std::swap(va, vb);
    const GameValue d = solver.solve(u, kMB);
    CHECK(va <= d);
    CHECK(d <= vb);
  }
}

TEST_CASE("restricted winning sets") {
  Solver solver;
  const Hypergraph p5 = hg(path(5));
  const std::vector<std::size_t> odd{edge_index(p5, {0, 1}), edge_index(p5, {1, 2, 3}), edge_index(p5, {3, 4})};
  CHECK(solver.solve_restricted(p5, odd, kMM) == fin(3));

  std::vector<std::size_t> all(p5.edge_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(solver.solve_restricted(p5, all, kMM) == solver.solve(p5, kMM));

  const Hypergraph p3 = hg(path(3));
  CHECK(solver.solve_restricted(p3, {edge_index(p3, {0, 1, 2})}, kMM) == kInf);
  CHECK_THROWS_AS(solver.solve_restricted(p3, {}, kMM), std::invalid_argument);
  CHECK_THROWS_AS(solver.solve_restricted(p3, {7}, kMM), std::out_of_range);
}

TEST_CASE("pass variants") {
  Solver solver;
  const Hypergraph p3 = hg(path(3));
  CHECK(solver.solve(p3, {M, M, true, false}) == fin(2));
  CHECK(solver.solve(p3, {M, M, false, true}) <= fin(2));
  CHECK(solver.solve(p3, {M, M, false, false}) == solver.solve(p3, kMM));

  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const Hypergraph h = closed_neighborhood_hypergraph(g);
      for (Player first : {M, B}) {
        const GameValue plain = solver.solve(h, GameSpec::of(M, first));
        CHECK(solver.solve(h, {M, first, true, false}) == plain);
        CHECK(solver.solve(h, {M, first, false, true}) <= plain);
      }
    }
  }
}

TEST_CASE("domination numbers") {
  const MbdValues p3 = mbd_values(path(3).graph);
  CHECK(p3.gamma_smb_prime == fin(2));
  CHECK(p3.gamma_smb == kInf);
  CHECK(p3.gamma_mb == fin(1));
  CHECK(p3.gamma_mb_prime == kInf);

  const MbdValues p4 = mbd_values(path(4).graph);
  CHECK(p4.gamma_smb_prime == kInf);
  CHECK(p4.gamma_mb_prime == fin(2));

  const MbdValues f2 = mbd_values(f_prime(2).graph);
  CHECK(f2.gamma_smb_prime == fin(3));
  CHECK(f2.gamma_smb == kInf);

  // Exactly one side of each game is finite.
  Solver solver;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const MbdValues v = mbd_values(g, solver, true);
      CHECK(v.gamma_smb.is_finite() != v.gamma_mb.is_finite());
      CHECK(v.gamma_smb_prime.is_finite() != v.gamma_mb_prime.is_finite());
      const MbdValues inferred = mbd_values(g, solver);
      CHECK(inferred.gamma_smb == v.gamma_smb);
      CHECK(inferred.gamma_smb_prime == v.gamma_smb_prime);
      CHECK(inferred.gamma_mb == v.gamma_mb);
      CHECK(inferred.gamma_mb_prime == v.gamma_mb_prime);
    }
  }
}

TEST_CASE("role switch against minimal transversals") {
  Solver solver;
  for (int n = 1; n <= 4; ++n) {
    for (const Hypergraph& h : simple_hypergraphs(n)) {
      const Hypergraph tr = minimal_transversals(h);
      CHECK(solver.solve(h, kMM) == solver.solve(tr, kBB));
      CHECK(solver.solve(h, kMB) == solver.solve(tr, kBM));
      CHECK(solver.solve(h, kBB) == solver.solve(tr, kMM));
      CHECK(solver.solve(h, kBM) == solver.solve(tr, kMB));
    }
  }
}

TEST_CASE("node budget") {
  Solver solver(SolverOptions{.node_budget = 5, .pairing_oracle = false});
  try {
    solver.solve(hg(path(11)), kMM);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.nodes() > 5);
    CHECK(e.lower() <= e.upper());
  }
}

TEST_CASE("results are deterministic") {
  const Hypergraph h = hg(tadpole(6, 3));
  Solver a;
  Solver b;
  CHECK(a.solve(h, kMM) == fin(4));
  CHECK(a.principal_line(h, kMM) == b.principal_line(h, kMM));
  Solver c;
  c.solve(h, kMM);
  const std::uint64_t nodes = c.stats().nodes;
  Solver d;
  d.solve(h, kMM);
  CHECK(d.stats().nodes == nodes);
}
