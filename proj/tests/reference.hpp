#pragma once

// Test-only oracles. They follow the game and set definitions literally and
// share no code with the library beyond the data types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "mbd/graph.hpp"
#include "mbd/hypergraph.hpp"
#include "mbd/solver.hpp"

namespace mbd::reference {

inline constexpr int kInf = 1 << 20;

/// Plain minimax over the claimed sets. Every unclaimed universe vertex is a
/// legal move (isolated ones included). Maker wins once his set contains an
/// edge, Breaker once hers meets every edge. A player allowed to pass may do
/// so while the opponent still has a vertex to claim.
class Minimax {
 public:
  Minimax(const Hypergraph& h, GameSpec spec) : h_(h), spec_(spec) {}

  GameValue value() {
    const int v = solve(0, 0, spec_.first);
    return v >= kInf ? GameValue::infinite() : GameValue::finite(v);
  }

 private:
  bool maker_won(std::uint64_t s) const {
    for (VertexSet e : h_.edges()) {
      if ((e.bits() & ~s) == 0) return true;
    }
    return false;
  }
  bool breaker_won(std::uint64_t d) const {
    for (VertexSet e : h_.edges()) {
      if ((e.bits() & d) == 0) return false;
    }
    return true;
  }

  int solve(std::uint64_t s, std::uint64_t d, Player turn) {
    if (maker_won(s)) return spec_.counted == Player::kMaker ? 0 : kInf;
    if (breaker_won(d)) return spec_.counted == Player::kBreaker ? 0 : kInf;
    const auto key = std::make_tuple(s, d, turn);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::uint64_t free = h_.universe().bits() & ~s & ~d;
    const bool counted_moves = turn == spec_.counted;
    int best = counted_moves ? kInf : -1;
    auto consider = [&](int child, bool claims) {
      const int v = child >= kInf ? kInf : child + (counted_moves && claims ? 1 : 0);
      best = counted_moves ? std::min(best, v) : std::max(best, v);
    };
    for (std::uint64_t rest = free; rest != 0; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      if (turn == Player::kMaker) {
        consider(solve(s | bit, d, Player::kBreaker), true);
      } else {
        consider(solve(s, d | bit, Player::kMaker), true);
      }
    }
    const bool may_pass = turn == Player::kMaker ? spec_.maker_may_pass : spec_.breaker_may_pass;
    // With a single pass flag the opponent must answer with a real move,
    // so passes never repeat.
    if (may_pass && free != 0) consider(solve_after_pass(s, d, other(turn)), false);
    if (best < 0) best = kInf;
    memo_[key] = best;
    return best;
  }

  // The player to move here may not pass.
  int solve_after_pass(std::uint64_t s, std::uint64_t d, Player turn) {
    const std::uint64_t free = h_.universe().bits() & ~s & ~d;
    const bool counted_moves = turn == spec_.counted;
    int best = counted_moves ? kInf : -1;
    for (std::uint64_t rest = free; rest != 0; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      const int child = turn == Player::kMaker ? solve(s | bit, d, Player::kBreaker)
                                                : solve(s, d | bit, Player::kMaker);
      const int v = child >= kInf ? kInf : child + (counted_moves ? 1 : 0);
      best = counted_moves ? std::min(best, v) : std::max(best, v);
    }
    return best < 0 ? kInf : best;
  }

  const Hypergraph& h_;
  GameSpec spec_;
  std::map<std::tuple<std::uint64_t, std::uint64_t, Player>, int> memo_;
};

inline GameValue game_value(const Hypergraph& h, GameSpec spec) { return Minimax(h, spec).value(); }

/// All minimal transversals by testing every subset of the universe.
inline std::vector<VertexSet> transversals_brute_force(const Hypergraph& h) {
  const std::uint64_t u = h.universe().bits();
  std::vector<std::uint64_t> hitting;
  // Enumerate submasks of the universe.
  for (std::uint64_t t = u;; t = (t - 1) & u) {
    bool hits = true;
    for (VertexSet e : h.edges()) hits = hits && (e.bits() & t) != 0;
    if (hits) hitting.push_back(t);
    if (t == 0) break;
  }
  std::vector<VertexSet> minimal;
  for (std::uint64_t t : hitting) {
    bool is_min = true;
    for (std::uint64_t o : hitting) {
      if (o != t && (o & ~t) == 0) is_min = false;
    }
    if (is_min) minimal.emplace_back(t);
  }
  return minimal;
}

/// Minimal dominating sets straight from the definition N[S] = V.
inline std::vector<VertexSet> dominating_sets_brute_force(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> dom;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::uint64_t covered = 0;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1U) {
        covered |= std::uint64_t{1} << v;
        for (int w = 0; w < n; ++w) {
          if (g.adjacent(v, w)) covered |= std::uint64_t{1} << w;
        }
      }
    }
    if (covered == (std::uint64_t{1} << n) - 1) dom.push_back(s);
  }
  std::vector<VertexSet> minimal;
  for (std::uint64_t s : dom) {
    bool is_min = true;
    for (std::uint64_t o : dom) {
      if (o != s && (o & ~s) == 0) is_min = false;
    }
    if (is_min) minimal.emplace_back(s);
  }
  return minimal;
}

/// Same family of sets, ignoring order.
inline bool same_family(std::vector<VertexSet> a, std::vector<VertexSet> b) {
  auto by_bits = [](VertexSet x, VertexSet y) { return x.bits() < y.bits(); };
  std::sort(a.begin(), a.end(), by_bits);
  std::sort(b.begin(), b.end(), by_bits);
  return a == b;
}

}  // namespace mbd::reference
