#pragma once

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace mbd {

/// Number of moves the counted player needs to win, or infinity when that
/// player cannot win. Every finite value compares below infinity.
class GameValue {
 public:
  /// Infinite.
  constexpr GameValue() = default;
  static constexpr GameValue finite(int moves) { return GameValue(moves); }
  static constexpr GameValue infinite() { return GameValue(kInf); }

  constexpr bool is_finite() const { return moves_ != kInf; }
  constexpr bool is_infinite() const { return moves_ == kInf; }

  int moves() const {
    if (!is_finite()) throw std::logic_error("GameValue::moves on an infinite value");
    return moves_;
  }

  /// infinity + k = infinity.
  constexpr GameValue plus(int k) const { return is_finite() ? GameValue(moves_ + k) : *this; }

  constexpr auto operator<=>(const GameValue&) const = default;

  /// Decimal count, or "inf".
  std::string to_string() const { return is_finite() ? std::to_string(moves_) : "inf"; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  constexpr explicit GameValue(int moves) : moves_(moves) {}
  int moves_ = kInf;
};

}  // namespace mbd
