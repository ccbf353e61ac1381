#include "play.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace mbd {

PlaySession::PlaySession(LabeledFamily family, Player human, Player first, Solver& solver)
    : family_(std::move(family)),
      human_(human),
      solver_(solver),
      board_(closed_neighborhood_hypergraph(family_.graph)),
      to_move_(first) {}

std::string PlaySession::role(Player p) { return p == Player::kMaker ? "Staller" : "Dominator"; }

std::string PlaySession::name(Vertex v) const { return family_.label(v); }

std::string PlaySession::set_string(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ", ";
    out += name(v);
    first = false;
  }
  return out + "}";
}

bool PlaySession::finished() const { return board_.has_empty_edge() || board_.edges().empty(); }

Player PlaySession::winner() const { return board_.has_empty_edge() ? Player::kMaker : Player::kBreaker; }

GameSpec PlaySession::spec() const { return GameSpec::of(Player::kMaker, to_move_); }

void PlaySession::apply(Vertex v) {
  const VertexSet x = VertexSet::single(v);
  if (to_move_ == Player::kMaker) {
    board_ = shrink(board_, x);
    maker_.insert(v);
  } else {
    board_ = delete_vertices(board_, x);
    breaker_.insert(v);
  }
  moves_.push_back(v);
  to_move_ = other(to_move_);
}

void PlaySession::engine_move(std::ostream& out) {
  const MoveChoice m = solver_.best_move(board_, spec());
  out << role(to_move_) << " plays " << name(m.vertex) << "\n";
  apply(m.vertex);
}

void PlaySession::show(std::ostream& out) const {
  out << "Staller has " << set_string(maker_) << ", Dominator has " << set_string(breaker_) << "\n";
  out << "open winning sets for Staller:";
  if (board_.edges().empty()) out << " none";
  for (VertexSet e : board_.edges()) out << " " << set_string(e);
  out << "\nunplayed: " << set_string(board_.universe()) << "\n";
}

void PlaySession::announce(std::ostream& out) const {
  const int staller_moves = maker_.size();
  const int dominator_moves = breaker_.size();
  if (winner() == Player::kMaker) {
    for (Vertex v = 0; v < family_.graph.order(); ++v) {
      const VertexSet nv = family_.graph.closed_neighborhood(v);
      if (nv.subset_of(maker_)) {
        out << "Staller wins: claimed N[" << name(v) << "] = " << set_string(nv) << " in " << staller_moves
            << " moves\n";
        return;
      }
    }
  }
  out << "Dominator wins: " << set_string(breaker_) << " is a dominating set, claimed in " << dominator_moves
      << " moves\n";
}

void PlaySession::run(std::istream& in, std::ostream& out) {
  out << family_.name << ": you are " << role(human_) << ", " << role(to_move_) << " starts.\n"
      << "Staller wins by claiming a closed neighbourhood N[v]; Dominator wins by claiming a dominating set.\n"
      << "Enter a vertex, or: hint, undo, show, help, quit.\n";
  while (!finished()) {
    if (to_move_ != human_) {
      engine_move(out);
      continue;
    }
    out << role(human_) << "> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      out << "\nsession ended\n";
      return;
    }
    std::istringstream words(line);
    std::string cmd;
    if (!(words >> cmd)) continue;
    if (cmd == "quit" || cmd == "exit") {
      out << "session ended\n";
      return;
    }
    if (cmd == "help") {
      out << "moves: a vertex label or id. commands: hint, undo, show, quit\n";
      continue;
    }
    if (cmd == "show") {
      show(out);
      continue;
    }
    if (cmd == "hint") {
      const MoveChoice m = solver_.best_move(board_, spec());
      out << "hint: " << name(m.vertex) << " (Staller needs " << m.value.to_string() << " more moves)\n";
      continue;
    }
    if (cmd == "undo") {
      if (undo_.empty()) {
        out << "nothing to undo\n";
        continue;
      }
      const Snapshot s = undo_.back();
      undo_.pop_back();
      board_ = s.board;
      to_move_ = s.to_move;
      maker_ = s.maker;
      breaker_ = s.breaker;
      moves_.resize(s.moves);
      out << "undone\n";
      continue;
    }
    const std::optional<Vertex> v = family_.find(cmd);
    if (!v) {
      out << "unknown vertex `" << cmd << "`\n";
      continue;
    }
    if (!board_.universe().contains(*v)) {
      out << name(*v) << " is already played\n";
      continue;
    }
    undo_.push_back({board_, to_move_, maker_, breaker_, moves_.size()});
    apply(*v);
  }
  announce(out);
}

}  // namespace mbd
