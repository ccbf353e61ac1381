#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mbd/graph.hpp"
#include "mbd/hypergraph.hpp"

namespace mbd {

/// Largest order the graph catalog is generated for.
inline constexpr int kCatalogMaxOrder = 7;

/// One representative of every isomorphism class of graphs on n vertices,
/// ordered by canonical code. Built by adding a vertex with every possible
/// neighbourhood to the graphs on n-1 vertices and keeping one graph per
/// canonical form (minimum adjacency code over all vertex permutations).
std::vector<Graph> all_graphs(int n);
/// The connected members of all_graphs(n).
std::vector<Graph> connected_graphs(int n);

/// Canonical code of g: the smallest upper-triangle adjacency word over all
/// relabellings. Equal iff the graphs are isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// Every simple hypergraph on the universe {0..n-1} with at least one edge
/// and no empty edge (all antichains of nonempty subsets), in a fixed order.
std::vector<Hypergraph> simple_hypergraphs(int n);

/// Deterministic sampling. Only raw mt19937_64 output is used, never a
/// standard distribution, so samples agree across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform-ish integer in [0, bound) by reduction modulo bound.
  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  /// Simple hypergraph on {0..n-1}: 1 to 2n random nonempty subsets,
  /// then simplified.
  Hypergraph simple_hypergraph(int n);

  /// Connected graph on n vertices: each pair becomes an edge with
  /// probability 1/2; redrawn until connected.
  Graph connected_graph(int n);

 private:
  std::mt19937_64 rng_;
};

}  // namespace mbd
