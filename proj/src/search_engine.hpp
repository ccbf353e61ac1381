#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mbd/solver.hpp"
#include "transposition_table.hpp"

namespace mbd {

/// Depth-bounded game search over simplified edge families.
///
/// `within(board, turn, k)` decides whether the counted player can win
/// using at most k more of their own moves. Boards are canonical simple
/// edge families without the empty edge and with at least one edge.
class SearchEngine {
 public:
  explicit SearchEngine(const SolverOptions& options);

  struct Outcome {
    bool win;
    /// On a win: an upper bound (<= k) on the counted player's remaining
    /// moves. Otherwise: a lower bound (> k) valid for the board passed in.
    int bound;
  };

  /// Exact value of the position; `board` must satisfy the invariants above.
  GameValue value(std::span<const std::uint64_t> board, const GameSpec& spec, Player to_move);

  void reset_counters() { nodes_ = 0; }
  std::uint64_t nodes() const { return nodes_; }
  const TranspositionTable& table() const { return table_; }

 private:
  static constexpr int kInf = Bounds::kInfBound;

  Outcome maker_node(std::span<const std::uint64_t> board, Player turn, int k, bool passed,
                     int ply);
  Outcome breaker_node(std::span<const std::uint64_t> board, Player turn, int k, bool passed,
                       int ply);

  std::uint32_t tag(Player turn, bool passed) const;
  void count_node();
  std::vector<std::uint64_t>& buffer(int ply);
  /// Fills `moves` with the vertices of `board`, best first.
  void order_moves(std::span<const std::uint64_t> board, Player mover, std::vector<int>& moves);
  /// True if disjoint vertex pairs exist such that every edge contains one.
  bool pairing_exists(std::span<const std::uint64_t> board);

  SolverOptions options_;
  GameSpec spec_;
  TranspositionTable table_;
  std::uint64_t nodes_ = 0;
  GameValue lower_seen_;
  std::vector<std::vector<std::uint64_t>> buffers_;
  std::vector<std::vector<int>> move_lists_;
};

}  // namespace mbd
