#include "mbd/solver.hpp"

#include <algorithm>

#include "search_engine.hpp"

namespace mbd {

std::string to_string(Player p) { return p == Player::kMaker ? "Maker" : "Breaker"; }

BudgetExceeded::BudgetExceeded(std::uint64_t nodes, GameValue lower, GameValue upper)
    : std::runtime_error("node budget exceeded after " + std::to_string(nodes) +
                         " nodes; value in [" + lower.to_string() + ", " + upper.to_string() + "]"),
      nodes_(nodes),
      lower_(lower),
      upper_(upper) {}

Solver::Solver(SolverOptions options)
    : options_(options), engine_(std::make_unique<SearchEngine>(options)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

namespace {

std::vector<std::uint64_t> root_board(const Hypergraph& h) {
  std::vector<VertexSet> edges = h.edges();
  simplify_edges(edges);
  std::vector<std::uint64_t> out;
  out.reserve(edges.size());
  for (VertexSet e : edges) out.push_back(e.bits());
  return out;
}

// Value for the counted player in a finished position.
GameValue terminal_value(const Hypergraph& h, const GameSpec& spec) {
  const bool maker_won = h.has_empty_edge();
  const bool counted_won = (spec.counted == Player::kMaker) == maker_won;
  return counted_won ? GameValue::finite(0) : GameValue::infinite();
}

bool finished(const Hypergraph& h) { return h.has_empty_edge() || h.edges().empty(); }

}  // namespace

GameValue Solver::solve_inner(const Hypergraph& h, const GameSpec& spec) {
  if (h.has_empty_edge()) {
    throw std::invalid_argument("solve: the position is already won by Maker (empty edge)");
  }
  const std::vector<std::uint64_t> board = root_board(h);
  if (board.empty()) {
    return spec.counted == Player::kMaker ? GameValue::infinite() : GameValue::finite(0);
  }
  return engine_->value(board, spec, spec.first);
}

GameValue Solver::solve(const Hypergraph& h, const GameSpec& spec) {
  engine_->reset_counters();
  GameValue v = solve_inner(h, spec);
  stats_.nodes = engine_->nodes();
  stats_.table_entries = engine_->table().size();
  stats_.table_clears = engine_->table().clears();
  return v;
}

MoveChoice Solver::best_move(const Hypergraph& h, const GameSpec& spec) {
  if (finished(h)) throw std::invalid_argument("best_move: the game is already over");
  engine_->reset_counters();
  const GameValue value = solve_inner(h, spec);
  const Player mover = spec.first;
  const Player winner = value.is_finite() ? spec.counted : other(spec.counted);

  // The winner's own count drives the choice: the winner minimises it and
  // the loser maximises it.
  GameSpec by_winner = spec;
  by_winner.counted = winner;
  by_winner.first = other(mover);
  Vertex best = -1;
  GameValue best_cost;
  for (Vertex v : h.support()) {
    const Hypergraph next = mover == Player::kMaker ? shrink(h, VertexSet::single(v))
                                                    : delete_vertices(h, VertexSet::single(v));
    GameValue rest = finished(next) ? terminal_value(next, by_winner) : solve_inner(next, by_winner);
    const GameValue cost = rest.plus(mover == winner ? 1 : 0);
    const bool better = best < 0 || (mover == winner ? cost < best_cost : cost > best_cost);
    if (better) {
      best = v;
      best_cost = cost;
    }
  }
  stats_.nodes = engine_->nodes();
  stats_.table_entries = engine_->table().size();
  return {best, value};
}

std::vector<Vertex> Solver::principal_line(const Hypergraph& h, const GameSpec& spec) {
  std::vector<Vertex> line;
  Hypergraph cur = h;
  GameSpec s = spec;
  while (!finished(cur)) {
    const MoveChoice m = best_move(cur, s);
    line.push_back(m.vertex);
    cur = s.first == Player::kMaker ? shrink(cur, VertexSet::single(m.vertex))
                                    : delete_vertices(cur, VertexSet::single(m.vertex));
    s.first = other(s.first);
  }
  return line;
}

GameValue Solver::solve_with_components(const Hypergraph& h, const GameSpec& spec) {
  if (!(spec == GameSpec::of(Player::kMaker, Player::kMaker))) {
    throw std::invalid_argument("solve_with_components: only w_M^M is supported");
  }
  if (h.has_empty_edge()) {
    throw std::invalid_argument("solve: the position is already won by Maker (empty edge)");
  }
  engine_->reset_counters();
  GameValue best = GameValue::infinite();
  for (const Hypergraph& c : components(h)) best = std::min(best, solve_inner(c, spec));
  stats_.nodes = engine_->nodes();
  stats_.table_entries = engine_->table().size();
  return best;
}

GameValue Solver::solve_restricted(const Hypergraph& h, const std::vector<std::size_t>& keep,
                                   const GameSpec& spec) {
  if (keep.empty()) throw std::invalid_argument("solve_restricted: no edges kept");
  std::vector<VertexSet> edges;
  for (std::size_t i : keep) {
    if (i >= h.edge_count()) throw std::out_of_range("solve_restricted: edge index out of range");
    edges.push_back(h.edges()[i]);
  }
  return solve(Hypergraph(h.universe(), std::move(edges)), spec);
}

GameValue solve(const Hypergraph& h, const GameSpec& spec, const SolverOptions& options) {
  Solver s(options);
  return s.solve(h, spec);
}

GameValue gamma_smb_prime(const Graph& g, Solver& solver) {
  return solver.solve(closed_neighborhood_hypergraph(g), GameSpec::of(Player::kMaker, Player::kMaker));
}

GameValue gamma_smb(const Graph& g, Solver& solver) {
  return solver.solve(closed_neighborhood_hypergraph(g),
                      GameSpec::of(Player::kMaker, Player::kBreaker));
}

MbdValues mbd_values(const Graph& g, Solver& solver, bool solve_both_sides) {
  const Hypergraph h = closed_neighborhood_hypergraph(g);
  MbdValues out;
  // D-game: Dominator (Breaker) starts. S-game: Staller (Maker) starts.
  for (Player first : {Player::kBreaker, Player::kMaker}) {
    const GameValue staller = solver.solve(h, GameSpec::of(Player::kMaker, first));
    GameValue dominator = GameValue::infinite();
    if (solve_both_sides || staller.is_infinite()) {
      dominator = solver.solve(h, GameSpec::of(Player::kBreaker, first));
    }
    if (first == Player::kBreaker) {
      out.gamma_smb = staller;
      out.gamma_mb = dominator;
    } else {
      out.gamma_smb_prime = staller;
      out.gamma_mb_prime = dominator;
    }
  }
  return out;
}

MbdValues mbd_values(const Graph& g, const SolverOptions& options) {
  Solver s(options);
  return mbd_values(g, s, false);
}

}  // namespace mbd
