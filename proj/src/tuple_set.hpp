#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "autorbit/element_table.hpp"

namespace autorbit::detail {

/// Insertion-ordered set of fixed-width index tuples.
class TupleSet {
 public:
  explicit TupleSet(std::size_t width) : width_(width), slots_(64, kEmpty) {}

  std::size_t size() const { return count_; }
  std::span<const Index> tuple(std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }

  bool contains(std::span<const Index> t) const { return lookup(t) != kEmpty; }

  bool insert(std::span<const Index> t) {
    if (lookup(t) != kEmpty) return false;
    if (2 * (count_ + 1) > slots_.size()) grow();
    data_.insert(data_.end(), t.begin(), t.end());
    place(static_cast<std::uint32_t>(count_));
    ++count_;
    return true;
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  static std::size_t hash(std::span<const Index> t) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Index x : t) {
      h ^= x;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  std::uint32_t lookup(std::span<const Index> t) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash(t) & mask;; s = (s + 1) & mask) {
      std::uint32_t id = slots_[s];
      if (id == kEmpty) return kEmpty;
      auto u = tuple(id);
      if (std::equal(u.begin(), u.end(), t.begin())) return id;
    }
  }

  void place(std::uint32_t id) {
    std::size_t mask = slots_.size() - 1;
    std::size_t s = hash(tuple(id)) & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = id;
  }

  void grow() {
    slots_.assign(slots_.size() * 2, kEmpty);
    for (std::uint32_t id = 0; id < count_; ++id) place(id);
  }

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Index> data_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace autorbit::detail
