#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "autorbit/element_table.hpp"

namespace autorbit {

struct ConjClass {
  Index representative_index = 0;  // smallest member index
  std::vector<Index> member_indices;  // sorted
  std::uint64_t element_order = 1;
  std::uint64_t size = 0;
};

/// A subgroup of an enumerated parent group. `elements` are indices into the
/// parent table, sorted.
struct SubgroupRecord {
  PermGroup subgroup;
  std::vector<Index> elements;
  bool is_normal = false;
  std::optional<bool> is_characteristic;

  std::uint64_t order() const { return elements.size(); }
};

/// Evidence for a homomorphism given by generator images. The map is an
/// isomorphism iff graph_order == |source| == |target| and the images
/// generate the target.
struct HomWitness {
  std::vector<Permutation> source_generators;
  std::vector<Permutation> image_elements;
  std::uint64_t graph_order = 0;
};

/// Conjugacy classes, ordered by (element order, size, representative).
std::vector<ConjClass> conjugacy_classes(const ElementTable& t);
/// class_of[i] = position in `classes` of the class containing element i.
std::vector<std::size_t> class_lookup(const ElementTable& t,
                                      const std::vector<ConjClass>& classes);

/// Sorted index set of the subgroup generated by `gens`.
std::vector<Index> subgroup_elements(const ElementTable& t, std::span<const Index> gens);
/// Builds a record for <gens>; generators are kept as given (identity dropped).
SubgroupRecord make_subgroup(const ElementTable& t, std::span<const Index> gens);
/// Builds a record for a subgroup given by its element set, choosing a short
/// generating sequence greedily.
SubgroupRecord subgroup_from_elements(const ElementTable& t, std::vector<Index> elements);
bool is_normal(const ElementTable& t, std::span<const Index> sorted_elements);

PermGroup derived_subgroup(const PermGroup& g);
/// G = G^(0) > G^(1) > ... until the series stabilises.
std::vector<PermGroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);
/// Normal closure of `elements` in g, computed through membership sifting.
PermGroup normal_closure(const PermGroup& g, std::vector<Permutation> elements);

/// All normal subgroups, sorted by (order, element list).
std::vector<SubgroupRecord> normal_subgroups(const ElementTable& t);

/// Action of G on right cosets Nx. Cosets are numbered by their smallest
/// element index. Throws NotNormalError.
PermGroup quotient(const ElementTable& t, const SubgroupRecord& n);

PermGroup direct_product(const PermGroup& a, const PermGroup& b);
PermGroup direct_power(const PermGroup& h, std::size_t k);

SubgroupRecord centralizer(const ElementTable& t, std::span<const Index> s);
SubgroupRecord center(const ElementTable& t);
/// Throws Error when p does not divide |G| or p is not prime.
SubgroupRecord sylow_subgroup(const ElementTable& t, std::uint64_t p);

bool is_simple(const ElementTable& t);
bool is_elementary_abelian(const PermGroup& g);
std::set<std::uint64_t> prime_set(const PermGroup& g);
std::set<std::uint64_t> spectrum(const ElementTable& t);

/// Order of the subgroup of G x H generated by the pairs (src[i], dst[i]).
std::uint64_t graph_order(std::span<const Permutation> src, std::span<const Permutation> dst);

/// Isomorphism test by generator-image search. Both groups must fit the
/// element cap. Returns a witness on success.
std::optional<HomWitness> find_isomorphism(const ElementTable& g, const ElementTable& h);
bool isomorphic(const ElementTable& g, const ElementTable& h);
bool isomorphic(const PermGroup& g, const PermGroup& h);

// number theory helpers used throughout
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);

}  // namespace autorbit
