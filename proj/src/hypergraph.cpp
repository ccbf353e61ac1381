#include "mbd/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mbd {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void canonicalize_edges(std::vector<VertexSet>& edges) {
  std::sort(edges.begin(), edges.end(), canonical_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void simplify_edges(std::vector<VertexSet>& edges) {
  // Canonical order puts every subset before its supersets.
  std::size_t kept = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexSet e = edges[i];
    bool redundant = false;
    for (std::size_t j = 0; j < kept; ++j) {
      if (edges[j].subset_of(e)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) edges[kept++] = e;
  }
  edges.resize(kept);
}

Hypergraph::Hypergraph(VertexSet universe, std::vector<VertexSet> edges)
    : universe_(universe), edges_(std::move(edges)) {
  for (VertexSet e : edges_) {
    if (!e.subset_of(universe_)) {
      throw std::invalid_argument("edge " + e.to_string() + " is not contained in universe " +
                                  universe_.to_string());
    }
  }
  canonicalize_edges(edges_);
}

Hypergraph Hypergraph::on_range(int n, std::vector<VertexSet> edges) {
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("hypergraph order exceeds 64 vertices");
  return Hypergraph(VertexSet::range(n), std::move(edges));
}

VertexSet Hypergraph::support() const {
  VertexSet s;
  for (VertexSet e : edges_) s |= e;
  return s;
}

int Hypergraph::min_edge_size() const { return edges_.empty() ? -1 : edges_.front().size(); }

bool Hypergraph::is_simple() const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (edges_[i].subset_of(edges_[j])) return false;
    }
  }
  return true;
}

bool Hypergraph::is_transversal(VertexSet t) const {
  return std::all_of(edges_.begin(), edges_.end(), [t](VertexSet e) { return e.intersects(t); });
}

std::string Hypergraph::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ',';
    out += edges_[i].to_string();
  }
  return out + "]";
}

Hypergraph canonicalize(const Hypergraph& h) { return h; }

Hypergraph simplify(const Hypergraph& h) {
  std::vector<VertexSet> edges = h.edges();
  simplify_edges(edges);
  return Hypergraph(h.universe(), std::move(edges));
}

namespace {

void require_subset(const Hypergraph& h, VertexSet x) {
  if (!x.subset_of(h.universe())) {
    throw std::invalid_argument("vertex set " + x.to_string() + " is not contained in universe " +
                                h.universe().to_string());
  }
}

void extend_transversals(const std::vector<VertexSet>& edges, VertexSet chosen,
                         std::vector<VertexSet>& out) {
  // Branch on a smallest edge that is still missed.
  const VertexSet* pick = nullptr;
  for (const VertexSet& e : edges) {
    if (!e.intersects(chosen) && (pick == nullptr || e.size() < pick->size())) pick = &e;
  }
  if (pick == nullptr) {
    out.push_back(chosen);
    return;
  }
  for (Vertex v : *pick) {
    VertexSet next = chosen;
    next.insert(v);
    extend_transversals(edges, next, out);
  }
}

}  // namespace

Hypergraph delete_vertices(const Hypergraph& h, VertexSet x) {
  require_subset(h, x);
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) {
    if (!e.intersects(x)) edges.push_back(e);
  }
  return Hypergraph(h.universe() - x, std::move(edges));
}

Hypergraph shrink(const Hypergraph& h, VertexSet x) {
  require_subset(h, x);
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (VertexSet e : h.edges()) edges.push_back(e - x);
  return Hypergraph(h.universe() - x, std::move(edges));
}

Hypergraph minimal_transversals(const Hypergraph& h) {
  if (h.has_empty_edge()) {
    throw std::invalid_argument("minimal_transversals: hypergraph has an empty edge");
  }
  std::vector<VertexSet> found;
  extend_transversals(h.edges(), VertexSet{}, found);
  canonicalize_edges(found);
  simplify_edges(found);
  return Hypergraph(h.universe(), std::move(found));
}

int transversal_number(const Hypergraph& h) { return minimal_transversals(h).min_edge_size(); }

std::vector<Hypergraph> components(const Hypergraph& h) {
  const auto& edges = h.edges();
  std::vector<std::size_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].intersects(edges[j])) parent[find(i)] = find(j);
    }
  }
  // Components are emitted in order of their first edge.
  std::vector<std::vector<VertexSet>> groups;
  std::vector<long> slot(edges.size(), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(edges[i]);
  }
  std::vector<Hypergraph> out;
  out.reserve(groups.size());
  for (auto& g : groups) {
    VertexSet span;
    for (VertexSet e : g) span |= e;
    out.emplace_back(span, std::move(g));
  }
  return out;
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("hypergraph: missing header");
  std::istringstream header(line);
  std::string tag;
  long n = -1;
  long m = -1;
  if (!(header >> tag >> n >> m) || tag != "h" || n < 0 || m < 0) {
    throw std::invalid_argument("hypergraph: expected header `h <n_vertices> <n_edges>`");
  }
  if (n > kMaxVertices) throw std::out_of_range("hypergraph: more than 64 vertices");
  std::vector<VertexSet> edges;
  for (long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw std::invalid_argument("hypergraph: missing edge line");
    std::istringstream row(line);
    VertexSet e;
    long v = 0;
    while (row >> v) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("hypergraph: vertex id " + std::to_string(v) + " out of range");
      }
      e.insert(static_cast<Vertex>(v));
    }
    if (!row.eof()) throw std::invalid_argument("hypergraph: malformed edge line `" + line + "`");
    edges.push_back(e);
  }
  return Hypergraph::on_range(static_cast<int>(n), std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "h " << h.universe().bound() << ' ' << h.edge_count() << '\n';
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (Vertex v : e) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

}  // namespace mbd
