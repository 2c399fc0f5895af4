#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "autorbit/perm_group.hpp"

namespace autorbit {

using Index = std::uint32_t;

inline constexpr std::uint64_t kDefaultElementCap = 250000;
inline constexpr std::uint64_t kProductTableCap = 5000;

/// Element cap in effect: AUTORBIT_ELEMENT_CAP if set to a positive integer,
/// otherwise kDefaultElementCap.
std::uint64_t element_cap();

/// Every element of a group, sorted lexicographically by image sequence, with
/// an element -> index lookup. Groups of order <= kProductTableCap also carry
/// a full product table.
class ElementTable {
 public:
  /// Throws CapacityError when order(group) > cap.
  explicit ElementTable(PermGroup group, std::uint64_t cap = element_cap());

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return size_; }
  std::size_t degree() const { return degree_; }

  std::span<const Point> element(Index i) const {
    return {images_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Permutation permutation(Index i) const;

  std::optional<Index> find(std::span<const Point> images) const;
  std::optional<Index> find(const Permutation& p) const { return find(p.images()); }
  /// Throws Error when p is not in the group.
  Index index_of(const Permutation& p) const;

  Index identity() const { return identity_; }
  Index multiply(Index a, Index b) const;
  Index inverse(Index a) const { return inverse_[a]; }
  Index power(Index a, std::uint64_t k) const;
  /// b^-1 a b
  Index conjugate(Index a, Index b) const {
    return multiply(multiply(inverse_[b], a), b);
  }
  std::uint64_t element_order(Index a) const { return orders_[a]; }
  const std::vector<Index>& generator_indices() const { return generator_indices_; }
  bool has_product_table() const { return !products_.empty(); }
  bool is_abelian() const;

 private:
  std::size_t slot_of(std::span<const Point> images) const;

  PermGroup group_;
  std::size_t degree_;
  std::size_t size_;
  std::vector<Point> images_;
  std::vector<Index> slots_;  // open addressing, kEmpty marks a free slot
  std::size_t slot_mask_ = 0;
  Index identity_ = 0;
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<Index> generator_indices_;
  std::vector<std::uint16_t> products_;
};

inline ElementTable enumerate_elements(const PermGroup& g, std::uint64_t cap = element_cap()) {
  return ElementTable(g, cap);
}

}  // namespace autorbit
