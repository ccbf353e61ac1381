#include "mbd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace mbd {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("graph order must be in [0, 64]");
  adj_.resize(static_cast<std::size_t>(n));
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u].insert(v);
  adj_[v].insert(u);
}

VertexSet Graph::closed_neighborhood(VertexSet s) const {
  VertexSet out = s;
  for (Vertex v : s) out |= adj_[v];
  return out;
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : kMaxVertices;
  for (const VertexSet& a : adj_) best = std::min(best, a.size());
  return best;
}

int Graph::edge_count() const {
  int twice = 0;
  for (const VertexSet& a : adj_) twice += a.size();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::leaf_neighbors(Vertex v) const {
  int count = 0;
  for (Vertex w : adj_[v]) count += is_leaf(w) ? 1 : 0;
  return count;
}

std::vector<VertexSet> Graph::component_sets() const {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (Vertex s = 0; s < order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp = VertexSet::single(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= adj_[v];
      frontier = next - comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool Graph::is_connected() const { return component_sets().size() <= 1; }

bool Graph::is_cut_vertex(Vertex v) const {
  const std::size_t before = component_sets().size();
  const Graph rest = induced(vertices() - VertexSet::single(v));
  return rest.component_sets().size() > before;
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> index(adj_.size(), -1);
  int next = 0;
  for (Vertex v : keep) index[v] = next++;
  Graph out(next);
  for (Vertex u : keep) {
    for (Vertex w : adj_[u] & keep) {
      if (u < w) out.add_edge(index[u], index[w]);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edge_list()) out.add_edge(u, v);
  for (auto [u, v] : b.edge_list()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

Hypergraph closed_neighborhood_hypergraph(const Graph& g) {
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) edges.push_back(g.closed_neighborhood(v));
  return Hypergraph(g.vertices(), std::move(edges));
}

Hypergraph minimal_dominating_sets(const Graph& g, int max_order) {
  const int n = g.order();
  if (n > max_order) {
    throw SizeBoundExceeded("minimal_dominating_sets: order " + std::to_string(n) +
                            " exceeds brute-force bound " + std::to_string(max_order));
  }
  std::vector<VertexSet> found;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const VertexSet s(bits);
    if (!g.is_dominating(s)) continue;
    bool minimal = true;
    for (Vertex v : s) {
      if (g.is_dominating(s - VertexSet::single(v))) {
        minimal = false;
        break;
      }
    }
    if (minimal) found.push_back(s);
  }
  return Hypergraph(g.vertices(), std::move(found));
}

int domination_number(const Graph& g, int max_order) {
  return minimal_dominating_sets(g, max_order).min_edge_size();
}

std::optional<Vertex> LabeledFamily::find(const std::string& label_or_id) const {
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == label_or_id) return static_cast<Vertex>(v);
  }
  int id = -1;
  const char* first = label_or_id.data();
  const char* last = first + label_or_id.size();
  auto [ptr, ec] = std::from_chars(first, last, id);
  if (ec == std::errc{} && ptr == last && id >= 0 && id < graph.order()) return id;
  return std::nullopt;
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::optional<Graph> g;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string tag;
    if (!(row >> tag) || tag == "c") continue;
    auto fail = [&](const std::string& what) {
      return std::invalid_argument("graph line " + std::to_string(line_no) + ": " + what);
    };
    if (tag == "p") {
      int n = -1;
      if (g || !(row >> n) || n < 0) throw fail("expected a single header `p <n>`");
      if (n > kMaxVertices) throw std::out_of_range("graph: more than 64 vertices");
      g.emplace(n);
    } else if (tag == "e") {
      int u = -1;
      int v = -1;
      if (!g) throw fail("edge before header");
      if (!(row >> u >> v)) throw fail("expected `e <u> <v>`");
      if (u < 0 || v < 0 || u >= g->order() || v >= g->order()) throw fail("vertex id out of range");
      if (u == v) throw fail("self-loop");
      g->add_edge(u, v);
    } else {
      throw fail("unknown record `" + tag + "`");
    }
  }
  if (!g) throw std::invalid_argument("graph: missing header `p <n>`");
  return *g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << '\n';
  for (auto [u, v] : g.edge_list()) out << "e " << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const LabeledFamily& f) {
  out << "graph \"" << f.name << "\" {\n";
  for (Vertex v = 0; v < f.graph.order(); ++v) {
    out << "  " << v << " [label=\"" << f.label(v) << "\"];\n";
  }
  for (auto [u, v] : f.graph.edge_list()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace mbd
