#include <algorithm>
#include <map>

#include "autorbit/automorphisms.hpp"
#include "autorbit/error.hpp"
#include "autorbit/structure.hpp"
#include "hom_search.hpp"

namespace autorbit {

namespace {

std::map<std::string, std::size_t> fingerprint_census(const ClassData& d) {
  std::map<std::string, std::size_t> out;
  for (const auto& f : d.class_fingerprint) ++out[f.key()];
  return out;
}

}  // namespace

std::optional<HomWitness> find_isomorphism(const ElementTable& g, const ElementTable& h) {
  if (g.size() != h.size()) return std::nullopt;
  if (g.size() == 1) {
    return HomWitness{{g.permutation(g.identity())}, {h.permutation(h.identity())}, 1};
  }
  if (g.is_abelian() != h.is_abelian()) return std::nullopt;
  if (spectrum(g) != spectrum(h)) return std::nullopt;

  const ClassData dg = class_data(g), dh = class_data(h);
  if (dg.classes.size() != dh.classes.size()) return std::nullopt;
  if (fingerprint_census(dg) != fingerprint_census(dh)) return std::nullopt;

  const std::vector<Index> base = generating_sequence(g);
  SearchOptions opts;
  detail::HomSearch search{g, dg, h, dh, base, opts};
  std::optional<std::vector<Index>> found;
  search.run([&](const std::vector<Index>&, const std::vector<Index>& images) {
    found = images;
    return false;
  });
  if (!found) return std::nullopt;

  HomWitness w;
  for (Index x : base) w.source_generators.push_back(g.permutation(x));
  for (Index y : *found) w.image_elements.push_back(h.permutation(y));
  w.graph_order = graph_order(w.source_generators, w.image_elements);
  const std::uint64_t image_order = PermGroup(h.degree(), w.image_elements).order();
  if (w.graph_order != g.size() || image_order != h.size())
    throw Error("internal: isomorphism witness failed the graph-order test");
  return w;
}

bool isomorphic(const ElementTable& g, const ElementTable& h) {
  return find_isomorphism(g, h).has_value();
}

bool isomorphic(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return false;
  return isomorphic(ElementTable(g), ElementTable(h));
}

}  // namespace autorbit
