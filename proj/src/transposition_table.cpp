#include "transposition_table.hpp"

#include <algorithm>

namespace mbd {

namespace {

constexpr std::size_t kInitialSlots = 1 << 12;

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

TranspositionTable::TranspositionTable(std::size_t limit)
    : slots_(kInitialSlots), limit_(std::max<std::size_t>(limit, 1024)) {}

std::uint64_t TranspositionTable::hash_of(std::span<const std::uint64_t> edges, std::uint32_t tag) {
  std::uint64_t h = mix(0x9e3779b97f4a7c15ULL + tag);
  for (std::uint64_t e : edges) h = mix(h ^ (e + 0x9e3779b97f4a7c15ULL + (h << 6)));
  return h == 0 ? 1 : h;
}

bool TranspositionTable::same_key(const Slot& s, std::span<const std::uint64_t> edges,
                                  std::uint32_t tag) const {
  return s.tag == tag && s.length == edges.size() &&
         std::equal(edges.begin(), edges.end(), arena_.begin() + s.offset);
}

std::size_t TranspositionTable::probe(std::span<const std::uint64_t> edges, std::uint32_t tag,
                                      std::uint64_t h) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = h & mask;
  while (slots_[i].hash != 0 && !(slots_[i].hash == h && same_key(slots_[i], edges, tag))) {
    i = (i + 1) & mask;
  }
  return i;
}

const Bounds* TranspositionTable::find(std::span<const std::uint64_t> edges,
                                       std::uint32_t tag) const {
  const std::uint64_t h = hash_of(edges, tag);
  const Slot& s = slots_[probe(edges, tag, h)];
  return s.hash == 0 ? nullptr : &s.bounds;
}

void TranspositionTable::merge(std::span<const std::uint64_t> edges, std::uint32_t tag, Bounds b) {
  const std::uint64_t h = hash_of(edges, tag);
  std::size_t i = probe(edges, tag, h);
  if (slots_[i].hash != 0) {
    Bounds& cur = slots_[i].bounds;
    cur.lower = std::max(cur.lower, b.lower);
    cur.upper = std::min(cur.upper, b.upper);
    return;
  }
  if (size_ >= limit_) {
    clear();
    ++clears_;
  }
  if (2 * (size_ + 1) > slots_.size()) {
    grow();
  }
  i = probe(edges, tag, h);
  Slot& s = slots_[i];
  s.hash = h;
  s.offset = static_cast<std::uint32_t>(arena_.size());
  s.length = static_cast<std::uint16_t>(edges.size());
  s.tag = static_cast<std::uint8_t>(tag);
  s.bounds = b;
  arena_.insert(arena_.end(), edges.begin(), edges.end());
  ++size_;
}

void TranspositionTable::grow() {
  std::vector<Slot> old(slots_.size() * 2);
  old.swap(slots_);
  const std::size_t mask = slots_.size() - 1;
  for (const Slot& s : old) {
    if (s.hash == 0) continue;
    std::size_t i = s.hash & mask;
    while (slots_[i].hash != 0) i = (i + 1) & mask;
    slots_[i] = s;
  }
}

void TranspositionTable::clear() {
  slots_.assign(kInitialSlots, Slot{});
  arena_.clear();
  arena_.shrink_to_fit();
  size_ = 0;
}

}  // namespace mbd
