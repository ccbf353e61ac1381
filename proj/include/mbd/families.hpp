#pragma once

#include <string>

#include "mbd/graph.hpp"

namespace mbd {

// Graph families with their landmark vertex labels. Every generator throws
// std::invalid_argument on out-of-range parameters.

/// P_n with labels v1..vn (id i carries label v{i+1}). n >= 1.
LabeledFamily path(int n);

/// C_n with labels v0..v{n-1}. n >= 3.
LabeledFamily cycle(int n);

/// K_r with labels k1..kr. r >= 1.
LabeledFamily complete(int r);

/// T(n, k): cycle v0..v{n-1}, tail u1..uk, and the edge v0 uk.
/// Ids: v_i -> i, u_j -> n + j - 1. n >= 3, k >= 1.
LabeledFamily tadpole(int n, int k);

/// S_k^1: centre c, supports s1..sk adjacent to c, leaves l1..lk with
/// li adjacent to si. Ids: c -> 0, s_i -> i, l_i -> k + i. k >= 1.
LabeledFamily subdivided_star_1(int k);

/// S_k^2: S_k^1 plus a vertex w (id 2k+1) adjacent to every support vertex.
LabeledFamily subdivided_star_2(int k);

/// F_k. F_1 is P_3 with the two leaves x0, x1 (ids 0, 1) and centre z1
/// (id 2). F_k is copy 1 of F_{k-1}, then copy 2, then z_k adjacent to all
/// of X_{k-1} in both copies. Landmarks: "X_k", "Y_k", "z_k".
LabeledFamily f_family(int k);

/// F'_k: F_k for k <= 2; for k >= 3, F_k plus a clique Y+_k of order k-1
/// joined to every vertex of Y_k. Landmarks add "Y+_k". k <= 4.
LabeledFamily f_prime(int k);

/// G_{r,s,t}: K_r, F'_{s-1}, F'_{t-1} in that order. 2 <= r <= s <= t.
LabeledFamily g_rst(int r, int s, int t);

/// G'_{r,s,t}: G_{r,s,t} plus the edges v z_{s-1} and v z_{t-1}, where v is
/// the first vertex of the K_r copy.
LabeledFamily g_rst_connected(int r, int s, int t);

/// Disjoint union; labels of `b` are prefixed when they collide with `a`.
LabeledFamily disjoint_union(const LabeledFamily& a, const LabeledFamily& b);

/// Parses a family string: `path:n`, `cycle:n`, `tadpole:n:k`, `f:k`,
/// `fprime:k`, `grst:r:s:t`, `grstc:r:s:t`, `star1:k`, `star2:k`,
/// `complete:r`, `empty:n`, and unions joined by `+`.
LabeledFamily parse_family(const std::string& spec);

/// Wraps an unlabelled graph; vertex labels are the decimal ids.
LabeledFamily unlabeled(const Graph& g, std::string name);

}  // namespace mbd
