#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mbd {

/// Proven bounds on the counted player's remaining moves from a position.
/// kInfBound stands for "cannot win".
struct Bounds {
  static constexpr std::int8_t kInfBound = 127;
  std::int8_t lower = 0;
  std::int8_t upper = kInfBound;
};

/// Hash map from (edge family, tag) to Bounds. Keys are compared exactly;
/// the edge masks live in a shared arena. When the entry count reaches the
/// limit the table is cleared, which only costs re-search.
class TranspositionTable {
 public:
  explicit TranspositionTable(std::size_t limit);

  /// Returns nullptr when absent.
  const Bounds* find(std::span<const std::uint64_t> edges, std::uint32_t tag) const;
  /// Tightens the stored bounds (max of lower bounds, min of upper bounds).
  void merge(std::span<const std::uint64_t> edges, std::uint32_t tag, Bounds b);

  std::size_t size() const { return size_; }
  std::uint64_t clears() const { return clears_; }
  void clear();

 private:
  struct Slot {
    std::uint64_t hash = 0;  // 0 marks an empty slot
    std::uint32_t offset = 0;
    std::uint16_t length = 0;
    std::uint8_t tag = 0;
    Bounds bounds;
  };

  static std::uint64_t hash_of(std::span<const std::uint64_t> edges, std::uint32_t tag);
  std::size_t probe(std::span<const std::uint64_t> edges, std::uint32_t tag, std::uint64_t h) const;
  bool same_key(const Slot& s, std::span<const std::uint64_t> edges, std::uint32_t tag) const;
  void grow();

  std::vector<Slot> slots_;
  std::vector<std::uint64_t> arena_;
  std::size_t size_ = 0;
  std::size_t limit_;
  std::uint64_t clears_ = 0;
};

}  // namespace mbd
