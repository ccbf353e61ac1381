#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbd/game_value.hpp"
#include "mbd/graph.hpp"
#include "mbd/hypergraph.hpp"

namespace mbd {

enum class Player : std::uint8_t { kMaker, kBreaker };

constexpr Player other(Player p) { return p == Player::kMaker ? Player::kBreaker : Player::kMaker; }
std::string to_string(Player p);

/// Which player's moves are counted, who moves first, and whether either
/// player may pass. The four pass-free combinations are the winning
/// numbers w_M^M, w_M^B, w_B^M, w_B^B (counted, first).
struct GameSpec {
  Player counted = Player::kMaker;
  Player first = Player::kMaker;
  bool maker_may_pass = false;
  bool breaker_may_pass = false;

  static constexpr GameSpec of(Player counted, Player first) { return {counted, first, false, false}; }
  constexpr bool has_passes() const { return maker_may_pass || breaker_may_pass; }
  bool operator==(const GameSpec&) const = default;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SolverOptions {
  /// Nodes visited per solve before BudgetExceeded is thrown.
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Prune Breaker-won positions that admit a pairing strategy.
  bool pairing_oracle = true;
  /// Transposition table is cleared when it grows past this many entries.
  std::size_t table_limit = std::size_t{1} << 23;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t table_entries = 0;
  std::uint64_t table_clears = 0;
};

/// Thrown when a search exceeds its node budget. Carries the bounds proven
/// so far for the counted player's value.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t nodes, GameValue lower, GameValue upper);
  std::uint64_t nodes() const { return nodes_; }
  GameValue lower() const { return lower_; }
  GameValue upper() const { return upper_; }

 private:
  std::uint64_t nodes_;
  GameValue lower_;
  GameValue upper_;
};

struct MoveChoice {
  Vertex vertex = -1;
  /// Value of the position (for the requested spec) before the move.
  GameValue value;
};

class SearchEngine;

/// Exact Maker-Breaker solver.
///
/// Maker wins as soon as his claimed vertices contain an edge. Breaker wins
/// as soon as her claimed vertices meet every edge; since her set can only
/// become a transversal on one of her own moves, this is the same as
/// claiming a minimal transversal with that move. The counted player
/// minimises their own move count, the other player maximises it, and the
/// value is infinite when the counted player cannot win.
///
/// Positions are kept as the simplified family of current winning sets:
/// Maker's move v shrinks every edge by v and Breaker's move deletes every
/// edge through v. Only vertices lying in a current edge are ever played;
/// a move on an isolated vertex is equivalent to a pass and never helps the
/// mover. The transposition table persists across calls on the same
/// instance. A Solver is not thread-safe; use one per thread.
class Solver {
 public:
  explicit Solver(SolverOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  /// Throws std::invalid_argument if H already contains the empty edge.
  GameValue solve(const Hypergraph& h, const GameSpec& spec);

  /// Optimal move for `spec.first`, the player to move. The player who wins
  /// the position plays to win as fast as possible and the loser delays as
  /// long as possible; remaining ties go to the smallest vertex id. Pass
  /// moves are never suggested. Throws std::invalid_argument on a finished
  /// position.
  MoveChoice best_move(const Hypergraph& h, const GameSpec& spec);

  /// Moves of optimal play from `h` until the game ends.
  std::vector<Vertex> principal_line(const Hypergraph& h, const GameSpec& spec);

  /// w_M^M as the minimum over connected components. Only the
  /// (Maker counted, Maker first) spec without passes is supported.
  GameValue solve_with_components(const Hypergraph& h, const GameSpec& spec);

  /// Solves the game whose winning sets are only the edges at the given
  /// positions of h.edges(); the board is unchanged.
  GameValue solve_restricted(const Hypergraph& h, const std::vector<std::size_t>& keep,
                             const GameSpec& spec);

  /// Statistics of the most recent top-level call.
  const SolveStats& stats() const { return stats_; }
  const SolverOptions& options() const { return options_; }

 private:
  GameValue solve_inner(const Hypergraph& h, const GameSpec& spec);

  SolverOptions options_;
  SolveStats stats_;
  std::unique_ptr<SearchEngine> engine_;
};

/// One-shot convenience wrapper.
GameValue solve(const Hypergraph& h, const GameSpec& spec, const SolverOptions& options = {});

/// The four domination-game numbers of a graph.
struct MbdValues {
  GameValue gamma_smb;        // Staller, Dominator starts: w_M^B(H_G)
  GameValue gamma_smb_prime;  // Staller, Staller starts:   w_M^M(H_G)
  GameValue gamma_mb;         // Dominator, Dominator starts: w_B^B(H_G)
  GameValue gamma_mb_prime;   // Dominator, Staller starts:   w_B^M(H_G)
};

/// Computes all four numbers on H_G. Unless `solve_both_sides` is set, the
/// loser's number of each game is inferred as infinite once the winner's
/// number is known finite.
MbdValues mbd_values(const Graph& g, Solver& solver, bool solve_both_sides = false);
MbdValues mbd_values(const Graph& g, const SolverOptions& options = {});

/// gamma'_SMB(G) = w_M^M(H_G).
GameValue gamma_smb_prime(const Graph& g, Solver& solver);
/// gamma_SMB(G) = w_M^B(H_G).
GameValue gamma_smb(const Graph& g, Solver& solver);

}  // namespace mbd
