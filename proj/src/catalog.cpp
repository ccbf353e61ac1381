#include "mbd/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace mbd {

namespace {

void require_order(int n) {
  if (n < 0 || n > kCatalogMaxOrder) {
    throw std::out_of_range("graph catalog: order must be in [0, " +
                            std::to_string(kCatalogMaxOrder) + "]");
  }
}

// Bit position of the pair (u, v), u < v, in the upper-triangle word.
int pair_bit(int n, int u, int v) { return u * n - u * (u + 1) / 2 + (v - u - 1); }

Graph from_code(int n, std::uint64_t code) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((code >> pair_bit(n, u, v)) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kCatalogMaxOrder) throw std::out_of_range("canonical_code: order too large");
  const auto edges = g.edge_list();
  std::array<int, kCatalogMaxOrder> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (auto [u, v] : edges) {
      const int a = std::min(perm[u], perm[v]);
      const int b = std::max(perm[u], perm[v]);
      code |= std::uint64_t{1} << pair_bit(n, a, b);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

std::vector<Graph> all_graphs(int n) {
  require_order(n);
  static std::recursive_mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  const std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n == 0) {
    out.emplace_back(0);
  } else {
    std::vector<std::uint64_t> codes;
    for (const Graph& smaller : all_graphs(n - 1)) {
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
        Graph g(n);
        for (auto [u, v] : smaller.edge_list()) g.add_edge(u, v);
        for (int u = 0; u < n - 1; ++u) {
          if ((nbrs >> u) & 1U) g.add_edge(u, n - 1);
        }
        codes.push_back(canonical_code(g));
      }
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    for (std::uint64_t c : codes) out.push_back(from_code(n, c));
  }
  cache.emplace(n, out);
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n)) {
    if (n > 0 && g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Hypergraph> simple_hypergraphs(int n) {
  if (n < 0 || n > 5) throw std::out_of_range("simple_hypergraphs: n must be in [0, 5]");
  std::vector<VertexSet> subsets;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) subsets.emplace_back(m);
  std::sort(subsets.begin(), subsets.end(), canonical_less);

  std::vector<Hypergraph> out;
  std::vector<VertexSet> chosen;
  // Subsets come in canonical order, so a later subset is never a proper
  // subset of an earlier one; only the other direction needs checking.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == subsets.size()) {
      if (!chosen.empty()) out.push_back(Hypergraph::on_range(n, chosen));
      return;
    }
    self(self, i + 1);
    const VertexSet s = subsets[i];
    if (std::none_of(chosen.begin(), chosen.end(), [&](VertexSet c) { return c.subset_of(s); })) {
      chosen.push_back(s);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Hypergraph Sampler::simple_hypergraph(int n) {
  if (n < 1 || n > 16) throw std::out_of_range("Sampler::simple_hypergraph: n must be in [1, 16]");
  const std::uint64_t nonempty = (std::uint64_t{1} << n) - 1;
  const int m = 1 + static_cast<int>(below(static_cast<std::uint64_t>(2 * n)));
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(1 + below(nonempty));
  return simplify(Hypergraph::on_range(n, std::move(edges)));
}

Graph Sampler::connected_graph(int n) {
  if (n < 1 || n > kMaxVertices) throw std::out_of_range("Sampler::connected_graph: bad order");
  while (true) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng_() >> 63) g.add_edge(u, v);
      }
    }
    if (g.is_connected()) return g;
  }
}

}  // namespace mbd
