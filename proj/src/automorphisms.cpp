#include "autorbit/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "autorbit/error.hpp"
#include "hom_search.hpp"
#include "subgroup_closure.hpp"
#include "tuple_set.hpp"
#include "union_find.hpp"

namespace autorbit {

std::string Fingerprint::key() const {
  return "o" + std::to_string(element_order) + "s" + std::to_string(class_size) + "[" +
         power_profile + "]";
}

ClassData class_data(const ElementTable& t) {
  ClassData d;
  d.classes = conjugacy_classes(t);
  d.class_of = class_lookup(t, d.classes);
  std::vector<std::uint64_t> primes;
  for (auto [p, e] : factorize(t.size())) primes.push_back(p);

  // classes are sorted by element order, so g^q for q | o(g) is already labelled
  d.class_fingerprint.resize(d.classes.size());
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const ConjClass& cls = d.classes[c];
    Fingerprint& f = d.class_fingerprint[c];
    f.element_order = cls.element_order;
    f.class_size = cls.size;
    for (std::uint64_t q : primes) {
      const std::size_t pc = d.class_of[t.power(cls.representative_index, q)];
      f.power_profile += std::to_string(q);
      if (cls.element_order % q == 0)
        f.power_profile += ":(" + d.class_fingerprint[pc].key() + ")";
      else
        f.power_profile += pc == c ? "=" : "~";
      f.power_profile += ";";
    }
  }
  std::map<std::string, std::uint32_t> ids;
  for (const auto& f : d.class_fingerprint) ids.emplace(f.key(), 0);
  for (auto& [k, v] : ids) {
    v = static_cast<std::uint32_t>(d.keys.size());
    d.keys.push_back(k);
  }
  std::vector<std::uint32_t> class_id(d.classes.size());
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    class_id[c] = ids[d.class_fingerprint[c].key()];
  d.fingerprint_id.resize(t.size());
  for (Index x = 0; x < t.size(); ++x) d.fingerprint_id[x] = class_id[d.class_of[x]];
  return d;
}

Fingerprint fingerprint(const ClassData& d, Index x) {
  return d.class_fingerprint[d.class_of[x]];
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < element_map.size(); ++i)
    if (element_map[i] != i) return false;
  return true;
}

std::vector<Index> generating_sequence(const ElementTable& t) {
  std::vector<Index> seq;
  if (t.size() == 1) return seq;
  std::vector<Index> cands(t.size());
  std::iota(cands.begin(), cands.end(), Index{0});
  std::stable_sort(cands.begin(), cands.end(), [&](Index a, Index b) {
    return t.element_order(a) > t.element_order(b);
  });
  constexpr std::size_t kTries = 32;
  detail::SubgroupClosure sub(t);
  sub.add(cands[0]);
  seq.push_back(cands[0]);
  while (sub.size() < t.size()) {
    std::optional<Index> best;
    std::size_t best_size = 0, tries = 0;
    for (Index y : cands) {
      if (sub.contains(y)) continue;
      detail::SubgroupClosure trial = sub;
      trial.add(y);
      if (trial.size() == t.size()) {
        best = y;
        break;
      }
      if (trial.size() > best_size) {
        best_size = trial.size();
        best = y;
      }
      if (++tries >= kTries) break;
    }
    sub.add(*best);
    seq.push_back(*best);
  }
  return seq;
}

Automorphism conjugation_automorphism(const ElementTable& t, Index g) {
  if (g >= t.size()) throw Error("conjugating element is not in the group");
  Automorphism a;
  a.element_map.resize(t.size());
  for (Index x = 0; x < t.size(); ++x) a.element_map[x] = t.conjugate(x, g);
  return a;
}

std::vector<Automorphism> AutomorphismGenerators::all() const {
  std::vector<Automorphism> out = searched;
  out.insert(out.end(), inner.begin(), inner.end());
  return out;
}

AutomorphismGenerators automorphism_generators(const ElementTable& t, const SearchOptions& opts) {
  return automorphism_generators(t, class_data(t), opts);
}

AutomorphismGenerators automorphism_generators(const ElementTable& t, const ClassData& d,
                                               const SearchOptions& opts) {
  AutomorphismGenerators out;
  out.base = generating_sequence(t);
  for (Index g : t.generator_indices()) {
    Automorphism a = conjugation_automorphism(t, g);
    if (!a.is_identity()) out.inner.push_back(std::move(a));
  }
  if (out.base.empty()) {
    out.searched.push_back(Automorphism{{t.identity()}});
    return out;
  }

  std::vector<Permutation> base_perms;
  for (Index g : out.base) base_perms.push_back(t.permutation(g));
  const bool certify = 2 * t.degree() <= 512;

  detail::HomSearch search{t, d, t, d, out.base, opts};
  std::map<Index, std::size_t> per_rep;
  out.first_image_reps = search.run([&](const std::vector<Index>& map,
                                        const std::vector<Index>& images) {
    if (certify) {
      std::vector<Permutation> image_perms;
      for (Index h : images) image_perms.push_back(t.permutation(h));
      if (graph_order(base_perms, image_perms) != t.size())
        throw Error("internal: Cayley extension accepted a map the graph-order test rejects");
    }
    ++per_rep[images[0]];
    out.searched.push_back(Automorphism{map});
    return true;
  });
  for (Index r : out.first_image_reps) out.searched_per_rep.push_back(per_rep[r]);
  std::sort(out.searched.begin(), out.searched.end());
  return out;
}

AutomorphismGroup automorphism_group(const ElementTable& t, std::span<const Index> base,
                                     std::span<const Automorphism> gens) {
  AutomorphismGroup out;
  out.base.assign(base.begin(), base.end());
  if (base.empty()) return out;
  const std::size_t k = base.size();
  detail::TupleSet orbit(k);
  orbit.insert(base);
  std::vector<Index> img(k);
  auto apply = [&](const Automorphism& a, std::span<const Index> tuple) {
    for (std::size_t i = 0; i < k; ++i) img[i] = a(tuple[i]);
  };
  for (const auto& a : gens) {
    if (a.element_map.size() != t.size()) throw Error("automorphism has the wrong size");
    apply(a, base);
    if (orbit.contains(img)) continue;
    out.generators.push_back(a);
    const std::size_t old = orbit.size();
    for (std::size_t p = 0; p < old; ++p) {
      apply(a, orbit.tuple(p));
      orbit.insert(img);
    }
    for (std::size_t p = old; p < orbit.size(); ++p)
      for (const auto& b : out.generators) {
        apply(b, orbit.tuple(p));
        orbit.insert(img);
      }
  }
  out.order = orbit.size();
  return out;
}

std::uint64_t automorphism_group_order(const ElementTable& t) {
  auto gens = automorphism_generators(t);
  return automorphism_group(t, gens.base, gens.all()).order;
}

std::uint64_t automorphism_group_order_bsgs(const ElementTable& t,
                                            std::span<const Automorphism> gens) {
  std::vector<Permutation> perms;
  for (const auto& a : gens)
    perms.push_back(Permutation(std::vector<Point>(a.element_map.begin(), a.element_map.end())));
  return PermGroup(t.size(), std::move(perms)).order();
}

OrbitPartition orbit_partition(const ElementTable& t, std::span<const Automorphism> gens) {
  detail::UnionFind uf(t.size());
  for (const auto& a : gens)
    for (Index x = 0; x < t.size(); ++x) uf.unite(x, a(x));
  std::map<std::size_t, std::vector<Index>> by_root;
  for (Index x = 0; x < t.size(); ++x) by_root[uf.find(x)].push_back(x);
  OrbitPartition out;
  for (auto& [root, cell] : by_root) out.cells.push_back(std::move(cell));
  std::sort(out.cells.begin(), out.cells.end());
  for (const auto& cell : out.cells) out.cell_orders.push_back(t.element_order(cell.front()));
  return out;
}

std::size_t omega(const ElementTable& t) {
  auto gens = automorphism_generators(t);
  auto group = automorphism_group(t, gens.base, gens.all());
  return orbit_partition(t, group.generators).size();
}

std::size_t omega(const PermGroup& g) { return omega(ElementTable(g)); }

bool is_at_group(const ElementTable& t, const OrbitPartition& partition) {
  return partition.size() == spectrum(t).size();
}

std::vector<SubgroupRecord> characteristic_subgroups(std::vector<SubgroupRecord> normal,
                                                     std::span<const Automorphism> gens) {
  std::vector<SubgroupRecord> out;
  std::size_t n = 0;
  for (const auto& rec : normal)
    if (!rec.elements.empty()) n = std::max<std::size_t>(n, rec.elements.back() + 1);
  for (auto& rec : normal) {
    std::vector<char> member(n, 0);
    for (Index x : rec.elements) member[x] = 1;
    bool invariant = true;
    for (const auto& a : gens) {
      for (Index x : rec.elements)
        if (!member[a(x)]) {
          invariant = false;
          break;
        }
      if (!invariant) break;
    }
    rec.is_characteristic = invariant;
    if (invariant) out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SubgroupRecord> characteristic_subgroups(const ElementTable& t,
                                                     std::span<const Automorphism> gens) {
  return characteristic_subgroups(normal_subgroups(t), gens);
}

bool is_characteristically_simple(const ElementTable& t, std::span<const Automorphism> gens) {
  return t.size() > 1 && characteristic_subgroups(t, gens).size() == 2;
}

bool verify_automorphism(const ElementTable& t, const Automorphism& a) {
  const std::size_t n = t.size();
  if (a.element_map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Index y : a.element_map) {
    if (y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  if (a(t.identity()) != t.identity()) return false;
  if (n <= kProductTableCap) {
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (a(t.multiply(x, y)) != t.multiply(a(x), a(y))) return false;
    return true;
  }
  // a(x g) = a(x) a(g) for all x and generators g already forces a homomorphism
  for (Index x = 0; x < n; ++x)
    for (Index g : t.generator_indices())
      if (a(t.multiply(x, g)) != t.multiply(a(x), a(g))) return false;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  for (int s = 0; s < 10000; ++s) {
    Index x = pick(rng), y = pick(rng);
    if (a(t.multiply(x, y)) != t.multiply(a(x), a(y))) return false;
  }
  return true;
}

Automorphism normalizer_induced_automorphism(const ElementTable& t, const Permutation& s) {
  if (s.degree() != t.degree())
    throw DegreeMismatch("normalizing permutation has degree " + std::to_string(s.degree()));
  for (const auto& g : t.group().generators())
    if (!t.find(conjugate(g, s)))
      throw Error("permutation " + s.to_cycles() + " does not normalize the group");
  const Permutation s_inv = s.inverse();
  Automorphism a;
  a.element_map.resize(t.size());
  std::vector<Point> tmp(t.degree()), out(t.degree());
  for (Index x = 0; x < t.size(); ++x) {
    compose_into(s_inv.images(), t.element(x), tmp);
    compose_into(tmp, s.images(), out);
    a.element_map[x] = *t.find(out);
  }
  return a;
}

}  // namespace autorbit
