#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mbd/vertex_set.hpp"

namespace mbd {

/// A set system over a vertex universe of at most 64 vertices.
///
/// The edge list is always canonical: sorted by (size, lexicographic
/// content) with exact duplicates merged. The empty edge may appear; it only
/// arises from shrinking (or from explicit construction in tests).
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws std::invalid_argument if some edge leaves the universe.
  Hypergraph(VertexSet universe, std::vector<VertexSet> edges);

  /// Universe {0, ..., n-1}.
  static Hypergraph on_range(int n, std::vector<VertexSet> edges);

  VertexSet universe() const { return universe_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_empty_edge() const { return !edges_.empty() && edges_.front().empty(); }
  /// Vertices lying in at least one edge.
  VertexSet support() const;
  /// Smallest edge size, or -1 if there are no edges.
  int min_edge_size() const;
  /// True iff no edge contains another edge.
  bool is_simple() const;
  /// True iff `t` meets every edge.
  bool is_transversal(VertexSet t) const;

  bool operator==(const Hypergraph&) const = default;

  std::string to_string() const;

 private:
  VertexSet universe_;
  std::vector<VertexSet> edges_;
};

/// Sorts and deduplicates an edge list in place.
void canonicalize_edges(std::vector<VertexSet>& edges);
/// Drops every edge that contains another edge. The input must be canonical;
/// the output is canonical.
void simplify_edges(std::vector<VertexSet>& edges);

Hypergraph canonicalize(const Hypergraph& h);

/// Removes every edge that properly contains another edge.
Hypergraph simplify(const Hypergraph& h);

/// H - X: removes X from the universe together with all edges meeting X.
Hypergraph delete_vertices(const Hypergraph& h, VertexSet x);

/// H | X: removes X from the universe and from every edge.
Hypergraph shrink(const Hypergraph& h, VertexSet x);

/// Tr(H): all minimal transversals, on the same universe.
///
/// Throws std::invalid_argument if H has an empty edge, since no transversal
/// exists in that case.
Hypergraph minimal_transversals(const Hypergraph& h);

/// tau(H), the smallest transversal size.
int transversal_number(const Hypergraph& h);

/// Splits H into connected components, where two edges are adjacent when
/// they share a vertex. Each component keeps the vertices its edges span;
/// vertices in no edge are dropped.
std::vector<Hypergraph> components(const Hypergraph& h);

/// Text format: `h <n> <m>` followed by m edge lines. An empty line is the
/// empty edge.
Hypergraph parse_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace mbd
