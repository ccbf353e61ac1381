#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

/// Witness that Dominator wins the continuation of a domination game:
/// Dominator has played `dominator`, Staller has played `staller`, and
/// `matching` is a matching of G - (dominator + staller) covering every
/// vertex that `dominator` does not already dominate.
struct PairingCertificate {
  VertexSet dominator;
  VertexSet staller;
  std::vector<std::pair<Vertex, Vertex>> matching;

  VertexSet matched() const;
};

enum class PairingVerdict {
  kValid,
  kNotAnEdge,        // some pair is not an edge of G
  kRepeatedVertex,   // pairs are not pairwise disjoint
  kPlayedVertex,     // a pair uses a vertex already played
  kOverlappingSets,  // dominator and staller sets intersect
  kUndominated,      // a vertex outside V(M) is not in N[dominator]
};

std::string_view to_string(PairingVerdict v);

/// Checks a certificate. Malformed matchings and the domination check report
/// distinct verdicts.
PairingVerdict check_pairing_certificate(const Graph& g, const PairingCertificate& c);

inline bool verify_pairing_certificate(const Graph& g, const PairingCertificate& c) {
  return check_pairing_certificate(g, c) == PairingVerdict::kValid;
}

/// Searches for a matching of G - (X + Y) that covers V(G) - N[X]. Complete:
/// returns nullopt only when no such matching exists. Throws
/// SizeBoundExceeded above `max_order` vertices and std::invalid_argument
/// when X and Y intersect.
std::optional<PairingCertificate> find_pairing_certificate(const Graph& g, VertexSet dominator,
                                                           VertexSet staller,
                                                           int max_order = kMaxVertices);

}  // namespace mbd
