#include "mbd/pairing.hpp"

#include <stdexcept>

namespace mbd {

VertexSet PairingCertificate::matched() const {
  VertexSet out;
  for (auto [a, b] : matching) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

std::string_view to_string(PairingVerdict v) {
  switch (v) {
    case PairingVerdict::kValid: return "valid";
    case PairingVerdict::kNotAnEdge: return "pair is not an edge";
    case PairingVerdict::kRepeatedVertex: return "pairs are not disjoint";
    case PairingVerdict::kPlayedVertex: return "pair uses a played vertex";
    case PairingVerdict::kOverlappingSets: return "dominator and staller sets intersect";
    case PairingVerdict::kUndominated: return "unmatched vertex is not dominated";
  }
  return "unknown";
}

PairingVerdict check_pairing_certificate(const Graph& g, const PairingCertificate& c) {
  if (c.dominator.intersects(c.staller)) return PairingVerdict::kOverlappingSets;
  const VertexSet played = c.dominator | c.staller;
  VertexSet used;
  for (auto [a, b] : c.matching) {
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || a == b || !g.adjacent(a, b)) {
      return PairingVerdict::kNotAnEdge;
    }
    if (used.contains(a) || used.contains(b)) return PairingVerdict::kRepeatedVertex;
    used.insert(a);
    used.insert(b);
  }
  if (used.intersects(played)) return PairingVerdict::kPlayedVertex;
  if (!(g.vertices() - used).subset_of(g.closed_neighborhood(c.dominator))) {
    return PairingVerdict::kUndominated;
  }
  return PairingVerdict::kValid;
}

namespace {

// Matches the lowest uncovered required vertex to each free neighbour in turn.
bool extend(const Graph& g, VertexSet required, VertexSet free,
            std::vector<std::pair<Vertex, Vertex>>& pairs) {
  if (required.empty()) return true;
  const Vertex r = required.min();
  if (!free.contains(r)) return false;
  for (Vertex w : g.neighbors(r) & free) {
    pairs.emplace_back(r, w);
    const VertexSet cover = VertexSet{r, w};
    if (extend(g, required - cover, free - cover, pairs)) return true;
    pairs.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PairingCertificate> find_pairing_certificate(const Graph& g, VertexSet dominator,
                                                           VertexSet staller, int max_order) {
  if (g.order() > max_order) {
    throw SizeBoundExceeded("find_pairing_certificate: order " + std::to_string(g.order()) +
                            " exceeds bound " + std::to_string(max_order));
  }
  if (dominator.intersects(staller)) {
    throw std::invalid_argument("find_pairing_certificate: X and Y intersect");
  }
  if (!(dominator | staller).subset_of(g.vertices())) {
    throw std::invalid_argument("find_pairing_certificate: played vertex out of range");
  }
  const VertexSet free = g.vertices() - dominator - staller;
  const VertexSet required = g.vertices() - g.closed_neighborhood(dominator);
  PairingCertificate cert{dominator, staller, {}};
  if (!extend(g, required, free, cert.matching)) return std::nullopt;
  return cert;
}

}  // namespace mbd
