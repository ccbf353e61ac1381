#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mbd/graph.hpp"
#include "mbd/solver.hpp"

namespace mbd {

/// Interactive domination game between a human and the engine.
///
/// Staller is Maker on H_G and Dominator is Breaker. Moves are entered by
/// vertex label (v1, u3, z2, ...) or raw id. Commands: hint, undo, show,
/// help, quit.
class PlaySession {
 public:
  PlaySession(LabeledFamily family, Player human, Player first, Solver& solver);

  /// Runs until the game ends, `quit`, or end of input.
  void run(std::istream& in, std::ostream& out);

  /// The winner once the game is over.
  bool finished() const;
  Player winner() const;
  const std::vector<Vertex>& moves() const { return moves_; }

 private:
  struct Snapshot {
    Hypergraph board;
    Player to_move;
    VertexSet maker;
    VertexSet breaker;
    std::size_t moves;
  };

  static std::string role(Player p);
  std::string name(Vertex v) const;
  std::string set_string(VertexSet s) const;
  void apply(Vertex v);
  void engine_move(std::ostream& out);
  void show(std::ostream& out) const;
  void announce(std::ostream& out) const;
  GameSpec spec() const;

  LabeledFamily family_;
  Player human_;
  Solver& solver_;
  Hypergraph board_;
  Player to_move_;
  VertexSet maker_;
  VertexSet breaker_;
  std::vector<Vertex> moves_;
  std::vector<Snapshot> undo_;
};

}  // namespace mbd
