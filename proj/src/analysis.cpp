#include "autorbit/analysis.hpp"

namespace autorbit {

GroupAnalysis::GroupAnalysis(PermGroup group, SearchOptions options, std::uint64_t cap)
    : group_(std::move(group)), options_(options), cap_(cap) {}
GroupAnalysis::GroupAnalysis(GroupAnalysis&&) noexcept = default;
GroupAnalysis& GroupAnalysis::operator=(GroupAnalysis&&) noexcept = default;
GroupAnalysis::~GroupAnalysis() = default;

bool GroupAnalysis::solvable() {
  if (!solvable_) solvable_ = autorbit::is_solvable(group_);
  return *solvable_;
}

const ElementTable& GroupAnalysis::table() {
  if (!table_) table_ = std::make_unique<ElementTable>(group_, cap_);
  return *table_;
}

const ClassData& GroupAnalysis::classes() {
  if (!classes_) classes_ = class_data(table());
  return *classes_;
}

const std::set<std::uint64_t>& GroupAnalysis::spectrum() {
  if (!spectrum_) {
    std::set<std::uint64_t> s;
    for (const auto& c : classes().classes) s.insert(c.element_order);
    spectrum_ = std::move(s);
  }
  return *spectrum_;
}

const AutomorphismGenerators& GroupAnalysis::automorphism_generators() {
  if (!aut_generators_)
    aut_generators_ = autorbit::automorphism_generators(table(), classes(), options_);
  return *aut_generators_;
}

const std::vector<Automorphism>& GroupAnalysis::automorphisms() {
  if (!automorphisms_) automorphisms_ = automorphism_generators().all();
  return *automorphisms_;
}

std::uint64_t GroupAnalysis::automorphism_group_order() {
  if (!aut_order_)
    aut_order_ =
        automorphism_group(table(), automorphism_generators().base, automorphisms()).order;
  return *aut_order_;
}

const OrbitPartition& GroupAnalysis::orbits() {
  if (!orbits_) orbits_ = orbit_partition(table(), automorphisms());
  return *orbits_;
}

bool GroupAnalysis::is_at() { return is_at_group(table(), orbits()); }

const std::vector<SubgroupRecord>& GroupAnalysis::normal_subgroups() {
  if (!normal_) normal_ = autorbit::normal_subgroups(table());
  return *normal_;
}

const std::vector<SubgroupRecord>& GroupAnalysis::characteristic_subgroups() {
  if (!characteristic_)
    characteristic_ = autorbit::characteristic_subgroups(normal_subgroups(), automorphisms());
  return *characteristic_;
}

bool GroupAnalysis::is_simple() {
  if (order() == 1) return false;
  if (is_abelian()) return is_prime(order());
  if (derived_subgroup(group_).order() != order()) return false;
  return normal_subgroups().size() == 2;
}

bool GroupAnalysis::is_abelian() {
  const auto& gens = group_.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

}  // namespace autorbit
