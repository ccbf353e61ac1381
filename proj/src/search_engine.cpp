#include "search_engine.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace mbd {

namespace {

using Board = std::span<const std::uint64_t>;

int popcount(std::uint64_t x) { return std::popcount(x); }

bool edge_less(std::uint64_t a, std::uint64_t b) {
  return canonical_less(VertexSet(a), VertexSet(b));
}

// Writes board | v (shrink by v) into `out`, canonical and simple.
void shrink_into(Board board, std::uint64_t vbit, std::vector<std::uint64_t>& out) {
  out.clear();
  for (std::uint64_t e : board) out.push_back(e & ~vbit);
  // Only shrunk edges moved; insertion sort restores canonical order cheaply.
  for (std::size_t i = 1; i < out.size(); ++i) {
    const std::uint64_t x = out[i];
    std::size_t j = i;
    while (j > 0 && edge_less(x, out[j - 1])) {
      out[j] = out[j - 1];
      --j;
    }
    out[j] = x;
  }
  // Drop supersets; in canonical order a subset always precedes its supersets.
  std::size_t kept = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t e = out[i];
    bool redundant = false;
    for (std::size_t j = 0; j < kept; ++j) {
      if ((out[j] & ~e) == 0) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out[kept++] = e;
  }
  out.resize(kept);
}

// Writes board - v (delete v) into `out`.
void delete_into(Board board, std::uint64_t vbit, std::vector<std::uint64_t>& out) {
  out.clear();
  for (std::uint64_t e : board) {
    if ((e & vbit) == 0) out.push_back(e);
  }
}

// Size of a greedy family of pairwise disjoint edges; a lower bound on the
// transversal number.
int disjoint_packing(Board board) {
  std::uint64_t used = 0;
  int count = 0;
  for (std::uint64_t e : board) {
    if ((e & used) == 0) {
      used |= e;
      ++count;
    }
  }
  return count;
}

std::int8_t clamp_bound(int b) { return static_cast<std::int8_t>(std::min(b, int{Bounds::kInfBound})); }

}  // namespace

// Every ply claims a vertex or passes, and passes never follow each other.
constexpr std::size_t kMaxPlies = 2 * kMaxVertices + 4;

SearchEngine::SearchEngine(const SolverOptions& options)
    : options_(options), table_(options.table_limit), buffers_(kMaxPlies), move_lists_(kMaxPlies) {}

std::uint32_t SearchEngine::tag(Player turn, bool passed) const {
  std::uint32_t t = spec_.counted == Player::kMaker ? 0U : 1U;
  t |= (turn == Player::kMaker ? 0U : 1U) << 1;
  t |= (passed ? 1U : 0U) << 2;
  t |= (spec_.maker_may_pass ? 1U : 0U) << 3;
  t |= (spec_.breaker_may_pass ? 1U : 0U) << 4;
  return t;
}

void SearchEngine::count_node() {
  if (++nodes_ > options_.node_budget) {
    throw BudgetExceeded(nodes_, lower_seen_, GameValue::infinite());
  }
}

std::vector<std::uint64_t>& SearchEngine::buffer(int ply) {
  return buffers_.at(static_cast<std::size_t>(ply));
}

void SearchEngine::order_moves(Board board, Player mover, std::vector<int>& moves) {
  // Erdos-Selfridge style potential: an edge of size s weighs 2^(40 - s).
  // Maker takes the vertex of largest potential among those in a smallest
  // edge; Breaker takes the vertex of largest potential. Ties by id.
  std::array<std::uint64_t, 64> weight{};
  std::uint64_t all = 0;
  for (std::uint64_t e : board) {
    const std::uint64_t w = std::uint64_t{1} << (40 - std::min(popcount(e), 40));
    all |= e;
    for (std::uint64_t rest = e; rest != 0; rest &= rest - 1) weight[std::countr_zero(rest)] += w;
  }
  const std::uint64_t smallest = board.empty() ? 0 : board.front();
  const int smin = popcount(smallest);
  std::uint64_t urgent = 0;
  for (std::uint64_t e : board) {
    if (popcount(e) != smin) break;
    urgent |= e;
  }
  moves.clear();
  for (std::uint64_t rest = all; rest != 0; rest &= rest - 1) moves.push_back(std::countr_zero(rest));
  auto key = [&](int v) {
    const bool in_urgent = mover == Player::kMaker && ((urgent >> v) & 1U);
    return std::pair<int, std::uint64_t>(in_urgent ? 0 : 1, ~weight[static_cast<std::size_t>(v)]);
  };
  std::stable_sort(moves.begin(), moves.end(), [&](int a, int b) { return key(a) < key(b); });
}

bool SearchEngine::pairing_exists(Board board) {
  const std::size_t m = board.size();
  if (m > 64) return false;
  // Search over pair choices, always covering the uncovered edge with the
  // fewest free vertices. Capped; giving up only loses pruning.
  int steps = 0;
  constexpr int kStepCap = 400;
  const std::uint64_t all_edges = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

  auto rec = [&](auto&& self, std::uint64_t covered, std::uint64_t used) -> bool {
    if (covered == all_edges) return true;
    if (++steps > kStepCap) return false;
    int pick = -1;
    int pick_free = 65;
    for (std::size_t i = 0; i < m; ++i) {
      if ((covered >> i) & 1U) continue;
      const int f = popcount(board[i] & ~used);
      if (f < pick_free) {
        pick_free = f;
        pick = static_cast<int>(i);
      }
    }
    if (pick_free < 2) return false;
    const std::uint64_t avail = board[static_cast<std::size_t>(pick)] & ~used;
    for (std::uint64_t a_rest = avail; a_rest != 0; a_rest &= a_rest - 1) {
      const std::uint64_t a = a_rest & (~a_rest + 1);
      for (std::uint64_t b_rest = a_rest & (a_rest - 1); b_rest != 0; b_rest &= b_rest - 1) {
        const std::uint64_t pair = a | (b_rest & (~b_rest + 1));
        std::uint64_t newly = covered;
        for (std::size_t i = 0; i < m; ++i) {
          if ((board[i] & pair) == pair) newly |= std::uint64_t{1} << i;
        }
        if (self(self, newly, used | pair)) return true;
        if (steps > kStepCap) return false;
      }
    }
    return false;
  };
  return rec(rec, 0, 0);
}

SearchEngine::Outcome SearchEngine::maker_node(Board full, Player turn, int k, bool passed,
                                               int ply) {
  count_node();
  // Edges larger than k cannot be completed with k more Maker moves.
  std::size_t keep = 0;
  while (keep < full.size() && popcount(full[keep]) <= k) ++keep;
  const bool filtered = keep < full.size();
  if (keep == 0) return {false, filtered ? std::max(k + 1, popcount(full.front())) : kInf};
  const Board board = full.first(keep);
  auto lower_for_caller = [&](int lb) { return filtered ? k + 1 : lb; };

  int singletons = 0;
  for (std::uint64_t e : board) {
    if (popcount(e) != 1) break;
    ++singletons;
  }
  if (turn == Player::kMaker && singletons >= 1) return {true, 1};
  if (turn == Player::kBreaker && singletons >= 2) return {true, 1};

  const std::uint32_t t = tag(turn, passed);
  if (const Bounds* b = table_.find(board, t)) {
    if (b->upper <= k) return {true, b->upper};
    if (b->lower > k) return {false, lower_for_caller(b->lower)};
  }

  if (options_.pairing_oracle && singletons == 0 && k >= 2 && pairing_exists(board)) {
    table_.merge(board, t, {Bounds::kInfBound, Bounds::kInfBound});
    return {false, lower_for_caller(kInf)};
  }

  auto& child = buffer(ply + 1);
  auto& moves = move_lists_[static_cast<std::size_t>(ply)];

  if (turn == Player::kMaker) {
    order_moves(board, Player::kMaker, moves);
    int best_lower = kInf;
    for (int v : moves) {
      shrink_into(board, std::uint64_t{1} << v, child);
      const Outcome r = maker_node(child, Player::kBreaker, k - 1, false, ply + 1);
      if (r.win) {
        table_.merge(board, t, {0, clamp_bound(1 + r.bound)});
        return {true, 1 + r.bound};
      }
      best_lower = std::min(best_lower, r.bound >= kInf ? kInf : 1 + r.bound);
    }
    if (spec_.maker_may_pass && !passed) {
      const std::vector<std::uint64_t> same(board.begin(), board.end());
      const Outcome r = maker_node(same, Player::kBreaker, k, true, ply + 1);
      if (r.win) {
        table_.merge(board, t, {0, clamp_bound(r.bound)});
        return {true, r.bound};
      }
      best_lower = std::min(best_lower, r.bound);
    }
    const int lb = std::max(k + 1, best_lower);
    table_.merge(board, t, {clamp_bound(lb), Bounds::kInfBound});
    return {false, lower_for_caller(lb)};
  }

  // Breaker to move. A lone singleton must be taken at once.
  if (singletons == 1) {
    moves.assign(1, std::countr_zero(board.front()));
  } else {
    order_moves(board, Player::kBreaker, moves);
  }
  int worst_upper = 0;
  for (int v : moves) {
    delete_into(board, std::uint64_t{1} << v, child);
    if (child.empty()) {
      table_.merge(board, t, {Bounds::kInfBound, Bounds::kInfBound});
      return {false, lower_for_caller(kInf)};
    }
    const Outcome r = maker_node(child, Player::kMaker, k, false, ply + 1);
    if (!r.win) {
      table_.merge(board, t, {clamp_bound(r.bound), Bounds::kInfBound});
      return {false, lower_for_caller(r.bound)};
    }
    worst_upper = std::max(worst_upper, r.bound);
  }
  if (spec_.breaker_may_pass && !passed && singletons == 0) {
    const std::vector<std::uint64_t> same(board.begin(), board.end());
    const Outcome r = maker_node(same, Player::kMaker, k, true, ply + 1);
    if (!r.win) {
      table_.merge(board, t, {clamp_bound(r.bound), Bounds::kInfBound});
      return {false, lower_for_caller(r.bound)};
    }
    worst_upper = std::max(worst_upper, r.bound);
  }
  table_.merge(board, t, {0, clamp_bound(worst_upper)});
  return {true, worst_upper};
}

SearchEngine::Outcome SearchEngine::breaker_node(Board board, Player turn, int k, bool passed,
                                                 int ply) {
  count_node();
  int singletons = 0;
  for (std::uint64_t e : board) {
    if (popcount(e) != 1) break;
    ++singletons;
  }
  // Maker completes an edge before Breaker can finish.
  if (turn == Player::kMaker && singletons >= 1) return {false, kInf};
  if (turn == Player::kBreaker && singletons >= 2) return {false, kInf};

  const int packing = disjoint_packing(board);
  if (packing > k) return {false, packing};

  const std::uint32_t t = tag(turn, passed);
  if (const Bounds* b = table_.find(board, t)) {
    if (b->upper <= k) return {true, b->upper};
    if (b->lower > k) return {false, b->lower};
  }

  auto& child = buffer(ply + 1);
  auto& moves = move_lists_[static_cast<std::size_t>(ply)];

  if (turn == Player::kBreaker) {
    if (singletons == 1) {
      moves.assign(1, std::countr_zero(board.front()));
    } else {
      order_moves(board, Player::kBreaker, moves);
    }
    int best_lower = kInf;
    for (int v : moves) {
      delete_into(board, std::uint64_t{1} << v, child);
      if (child.empty()) {
        table_.merge(board, t, {0, 1});
        return {true, 1};
      }
      const Outcome r = breaker_node(child, Player::kMaker, k - 1, false, ply + 1);
      if (r.win) {
        table_.merge(board, t, {0, clamp_bound(1 + r.bound)});
        return {true, 1 + r.bound};
      }
      best_lower = std::min(best_lower, r.bound >= kInf ? kInf : 1 + r.bound);
    }
    if (spec_.breaker_may_pass && !passed && singletons == 0) {
      const std::vector<std::uint64_t> same(board.begin(), board.end());
      const Outcome r = breaker_node(same, Player::kMaker, k, true, ply + 1);
      if (r.win) {
        table_.merge(board, t, {0, clamp_bound(r.bound)});
        return {true, r.bound};
      }
      best_lower = std::min(best_lower, r.bound);
    }
    const int lb = std::max(k + 1, best_lower);
    table_.merge(board, t, {clamp_bound(lb), Bounds::kInfBound});
    return {false, lb};
  }

  order_moves(board, Player::kMaker, moves);
  int worst_upper = 0;
  for (int v : moves) {
    shrink_into(board, std::uint64_t{1} << v, child);
    const Outcome r = breaker_node(child, Player::kBreaker, k, false, ply + 1);
    if (!r.win) {
      table_.merge(board, t, {clamp_bound(r.bound), Bounds::kInfBound});
      return {false, r.bound};
    }
    worst_upper = std::max(worst_upper, r.bound);
  }
  if (spec_.maker_may_pass && !passed) {
    const std::vector<std::uint64_t> same(board.begin(), board.end());
    const Outcome r = breaker_node(same, Player::kBreaker, k, true, ply + 1);
    if (!r.win) {
      table_.merge(board, t, {clamp_bound(r.bound), Bounds::kInfBound});
      return {false, r.bound};
    }
    worst_upper = std::max(worst_upper, r.bound);
  }
  table_.merge(board, t, {0, clamp_bound(worst_upper)});
  return {true, worst_upper};
}

GameValue SearchEngine::value(Board board, const GameSpec& spec, Player to_move) {
  spec_ = spec;
  std::uint64_t support = 0;
  for (std::uint64_t e : board) support |= e;
  const int free = popcount(support);
  // Most moves the counted player can make before the board runs out.
  int kmax = free;
  if (!spec.has_passes()) kmax = spec.counted == to_move ? (free + 1) / 2 : free / 2;

  int k = spec.counted == Player::kMaker ? popcount(board.front()) : disjoint_packing(board);
  lower_seen_ = GameValue::finite(k);
  const std::vector<std::uint64_t> root(board.begin(), board.end());
  while (k <= kmax) {
    const Outcome r = spec.counted == Player::kMaker ? maker_node(root, to_move, k, false, 0)
                                                     : breaker_node(root, to_move, k, false, 0);
    if (r.win) return GameValue::finite(k);
    if (r.bound >= kInf) break;
    k = std::max(k + 1, r.bound);
    lower_seen_ = GameValue::finite(k);
  }
  return GameValue::infinite();
}

}  // namespace mbd
