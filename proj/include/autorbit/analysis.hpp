#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "autorbit/automorphisms.hpp"

namespace autorbit {

/// Lazily computed invariants of one group. Each accessor computes what it
/// needs on first use and caches it; accessors needing the element table
/// throw CapacityError above `cap`, and the automorphism search honours the
/// deadline in `options`.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(PermGroup group, SearchOptions options = {},
                         std::uint64_t cap = element_cap());
  GroupAnalysis(GroupAnalysis&&) noexcept;
  GroupAnalysis& operator=(GroupAnalysis&&) noexcept;
  ~GroupAnalysis();

  const PermGroup& group() const { return group_; }
  std::uint64_t order() const { return group_.order(); }
  bool fits() const { return order() <= cap_; }

  bool solvable();
  std::set<std::uint64_t> primes() const { return prime_set(group_); }

  const ElementTable& table();
  const ClassData& classes();
  const std::set<std::uint64_t>& spectrum();
  const AutomorphismGenerators& automorphism_generators();
  const std::vector<Automorphism>& automorphisms();
  std::uint64_t automorphism_group_order();
  const OrbitPartition& orbits();
  std::size_t omega() { return orbits().size(); }
  bool is_at();
  const std::vector<SubgroupRecord>& normal_subgroups();
  const std::vector<SubgroupRecord>& characteristic_subgroups();
  bool is_simple();
  bool is_abelian();

 private:
  PermGroup group_;
  SearchOptions options_;
  std::uint64_t cap_;
  std::optional<bool> solvable_;
  std::unique_ptr<ElementTable> table_;
  std::optional<ClassData> classes_;
  std::optional<std::set<std::uint64_t>> spectrum_;
  std::optional<AutomorphismGenerators> aut_generators_;
  std::optional<std::vector<Automorphism>> automorphisms_;
  std::optional<std::uint64_t> aut_order_;
  std::optional<OrbitPartition> orbits_;
  std::optional<std::vector<SubgroupRecord>> normal_;
  std::optional<std::vector<SubgroupRecord>> characteristic_;
};

}  // namespace autorbit
