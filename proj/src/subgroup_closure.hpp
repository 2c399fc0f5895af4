#pragma once

#include <algorithm>
#include <vector>

#include "autorbit/element_table.hpp"
#include "autorbit/structure.hpp"

namespace autorbit::detail {

/// Subgroup of an enumerated group grown one generator at a time. Each
/// add() extends the element list so it stays closed under right
/// multiplication by every generator added so far.
class SubgroupClosure {
 public:
  explicit SubgroupClosure(const ElementTable& t)
      : table_(&t), member_(t.size(), 0), elements_{t.identity()} {
    member_[t.identity()] = 1;
  }

  bool contains(Index x) const { return member_[x] != 0; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Index>& generators() const { return gens_; }
  const std::vector<Index>& elements() const { return elements_; }

  bool contains_all(const SubgroupClosure& other) const {
    if (other.size() > size()) return false;
    for (Index g : other.gens_)
      if (!member_[g]) return false;
    return true;
  }

  /// Returns false (and changes nothing) when x is already a member.
  bool add(Index x) {
    if (member_[x]) return false;
    gens_.push_back(x);
    const std::size_t old = elements_.size();
    for (std::size_t i = 0; i < old; ++i) push(table_->multiply(elements_[i], x));
    for (std::size_t i = old; i < elements_.size(); ++i)
      for (Index g : gens_) push(table_->multiply(elements_[i], g));
    return true;
  }

  std::vector<Index> sorted_elements() const {
    std::vector<Index> v = elements_;
    std::sort(v.begin(), v.end());
    return v;
  }

  SubgroupRecord record(bool normal) const {
    std::vector<Permutation> perms;
    for (Index g : gens_) perms.push_back(table_->permutation(g));
    return SubgroupRecord{PermGroup(table_->degree(), std::move(perms)), sorted_elements(),
                          normal, {}};
  }

 private:
  void push(Index y) {
    if (member_[y]) return;
    member_[y] = 1;
    elements_.push_back(y);
  }

  const ElementTable* table_;
  std::vector<char> member_;
  std::vector<Index> elements_;
  std::vector<Index> gens_;
};

}  // namespace autorbit::detail
