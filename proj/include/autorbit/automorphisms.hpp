#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autorbit/element_table.hpp"
#include "autorbit/structure.hpp"

namespace autorbit {

/// Automorphism-invariant label of a conjugacy class. `power_profile` records,
/// for each prime q dividing |G| in increasing order, either the full label
/// of the class of g^q (q divides the element order) or whether g^q stays in
/// the class of g (q coprime to the element order). Labels of different
/// groups are directly comparable.
struct Fingerprint {
  std::uint64_t element_order = 1;
  std::uint64_t class_size = 1;
  std::string power_profile;

  std::string key() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Conjugacy classes plus per-element fingerprint ids. Ids are dense and
/// local to one table; use `keys` to compare across tables.
struct ClassData {
  std::vector<ConjClass> classes;
  std::vector<std::size_t> class_of;        // element -> class
  std::vector<Fingerprint> class_fingerprint;  // class -> fingerprint
  std::vector<std::string> keys;            // fingerprint id -> key
  std::vector<std::uint32_t> fingerprint_id;  // element -> fingerprint id
};

ClassData class_data(const ElementTable& t);
Fingerprint fingerprint(const ClassData& d, Index x);

/// A permutation of element indices that preserves products.
struct Automorphism {
  std::vector<Index> element_map;

  Index operator()(Index x) const { return element_map[x]; }
  bool is_identity() const;
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism& a, const Automorphism& b) {
    return a.element_map <=> b.element_map;
  }
};

struct OrbitPartition {
  std::vector<std::vector<Index>> cells;  // each sorted; cells sorted by first member
  std::vector<std::uint64_t> cell_orders;

  std::size_t size() const { return cells.size(); }
};

struct SearchOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Greedy short generating sequence: maximal element order first, ties by
/// index; each further element is the first candidate that completes the
/// group, or failing that the one enlarging the subgroup most.
std::vector<Index> generating_sequence(const ElementTable& t);

Automorphism conjugation_automorphism(const ElementTable& t, Index g);

struct AutomorphismGenerators {
  std::vector<Index> base;               // generating sequence of G
  std::vector<Automorphism> searched;    // validated maps, first image a class rep
  std::vector<Automorphism> inner;       // conjugation by the group generators
  std::vector<std::size_t> searched_per_rep;  // count of searched maps per first-image rep
  std::vector<Index> first_image_reps;

  std::vector<Automorphism> all() const;
};

/// Together with Inn(G) the searched maps generate Aut(G): every automorphism
/// is inner composed with one of them. Throws CapacityError / TimeoutError.
AutomorphismGenerators automorphism_generators(const ElementTable& t,
                                               const SearchOptions& opts = {});
AutomorphismGenerators automorphism_generators(const ElementTable& t, const ClassData& d,
                                               const SearchOptions& opts = {});

/// Aut(G) as a group acting on element indices. Since an automorphism is
/// fixed by the images of `base`, |Aut(G)| is the orbit length of the base
/// tuple; `generators` is an irredundant subset of the input.
struct AutomorphismGroup {
  std::vector<Index> base;
  std::vector<Automorphism> generators;
  std::uint64_t order = 1;
};

AutomorphismGroup automorphism_group(const ElementTable& t, std::span<const Index> base,
                                     std::span<const Automorphism> gens);
std::uint64_t automorphism_group_order(const ElementTable& t);
/// Same order through a stabilizer chain on |G| points; feasible for small G.
std::uint64_t automorphism_group_order_bsgs(const ElementTable& t,
                                            std::span<const Automorphism> gens);

OrbitPartition orbit_partition(const ElementTable& t, std::span<const Automorphism> gens);
std::size_t omega(const ElementTable& t);
std::size_t omega(const PermGroup& g);

bool is_at_group(const ElementTable& t, const OrbitPartition& partition);

std::vector<SubgroupRecord> characteristic_subgroups(const ElementTable& t,
                                                     std::span<const Automorphism> gens);
std::vector<SubgroupRecord> characteristic_subgroups(std::vector<SubgroupRecord> normal,
                                                     std::span<const Automorphism> gens);
bool is_characteristically_simple(const ElementTable& t, std::span<const Automorphism> gens);

/// Exhaustive product check for |G| <= kProductTableCap; above that, the
/// complete generator-edge check plus 10^4 random pairs.
bool verify_automorphism(const ElementTable& t, const Automorphism& a);
/// x -> s^-1 x s for a permutation s normalizing G. Throws Error when s does
/// not normalize G.
Automorphism normalizer_induced_automorphism(const ElementTable& t, const Permutation& s);

}  // namespace autorbit
