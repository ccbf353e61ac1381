#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mbd/hypergraph.hpp"
#include "mbd/vertex_set.hpp"

namespace mbd {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  /// Throws on self-loops or out-of-range endpoints. Repeated edges are ignored.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighborhood(Vertex v) const { return adj_[v] | VertexSet::single(v); }
  VertexSet closed_neighborhood(VertexSet s) const;
  int degree(Vertex v) const { return adj_[v].size(); }
  /// delta(G); 0 for the empty graph.
  int min_degree() const;
  int edge_count() const;
  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  /// Number of leaf neighbours of v.
  int leaf_neighbors(Vertex v) const;
  bool is_support(Vertex v) const { return leaf_neighbors(v) >= 1; }
  bool is_strong_support(Vertex v) const { return leaf_neighbors(v) >= 2; }
  bool is_weak_support(Vertex v) const { return leaf_neighbors(v) == 1; }

  bool is_dominating(VertexSet s) const { return closed_neighborhood(s) == vertices(); }
  bool is_connected() const;
  bool is_cut_vertex(Vertex v) const;

  /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing id order.
  Graph induced(VertexSet keep) const;
  /// Vertex sets of the connected components, ordered by smallest vertex.
  std::vector<VertexSet> component_sets() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// H_G: edges {N[v] : v in V(G)}.
Hypergraph closed_neighborhood_hypergraph(const Graph& g);

/// Default limit for brute-force enumeration over all vertex subsets.
inline constexpr int kBruteForceOrder = 24;

/// D_G by enumeration of all vertex subsets. Throws SizeBoundExceeded when
/// the order exceeds `max_order`.
Hypergraph minimal_dominating_sets(const Graph& g, int max_order = kBruteForceOrder);

/// gamma(G).
int domination_number(const Graph& g, int max_order = kBruteForceOrder);

class SizeBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph together with the names of its vertices and of the distinguished
/// vertex sets of its construction.
struct LabeledFamily {
  std::string name;
  Graph graph;
  /// labels[v] is the display name of vertex v; unique within the family.
  std::vector<std::string> labels;
  /// Named vertex sets such as "X_3", "Y_3", "Y+_3", "cycle", "tail".
  std::map<std::string, VertexSet> landmarks;

  /// Looks a vertex up by label or by its decimal id.
  std::optional<Vertex> find(const std::string& label_or_id) const;
  std::string label(Vertex v) const { return labels.at(static_cast<std::size_t>(v)); }
};

/// DIMACS-like text format: `p <n>` then `e <u> <v>` lines, 0-based.
Graph parse_graph(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
/// Graphviz export using the family labels.
void write_dot(std::ostream& out, const LabeledFamily& f);

}  // namespace mbd
