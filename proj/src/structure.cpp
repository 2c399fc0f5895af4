#include "autorbit/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "autorbit/error.hpp"
#include "subgroup_closure.hpp"

namespace autorbit {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<ConjClass> conjugacy_classes(const ElementTable& t) {
  const std::size_t n = t.size();
  std::vector<char> seen(n, 0);
  std::vector<ConjClass> classes;
  const auto& gens = t.generator_indices();
  for (Index x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ConjClass c;
    c.representative_index = x;
    c.element_order = t.element_order(x);
    c.member_indices.push_back(x);
    seen[x] = 1;
    for (std::size_t k = 0; k < c.member_indices.size(); ++k) {
      for (Index g : gens) {
        Index y = t.conjugate(c.member_indices[k], g);
        if (!seen[y]) {
          seen[y] = 1;
          c.member_indices.push_back(y);
        }
      }
    }
    std::sort(c.member_indices.begin(), c.member_indices.end());
    c.size = c.member_indices.size();
    classes.push_back(std::move(c));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.representative_index < b.representative_index;
  });
  return classes;
}

std::vector<std::size_t> class_lookup(const ElementTable& t,
                                      const std::vector<ConjClass>& classes) {
  std::vector<std::size_t> out(t.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Index x : classes[c].member_indices) out[x] = c;
  return out;
}

std::vector<Index> subgroup_elements(const ElementTable& t, std::span<const Index> gens) {
  detail::SubgroupClosure c(t);
  for (Index g : gens) c.add(g);
  return c.sorted_elements();
}

SubgroupRecord make_subgroup(const ElementTable& t, std::span<const Index> gens) {
  detail::SubgroupClosure c(t);
  std::vector<Permutation> perms;
  for (Index g : gens) {
    if (g == t.identity()) continue;
    c.add(g);
    perms.push_back(t.permutation(g));
  }
  SubgroupRecord r{PermGroup(t.degree(), std::move(perms)), c.sorted_elements(), false, {}};
  r.is_normal = is_normal(t, r.elements);
  return r;
}

SubgroupRecord subgroup_from_elements(const ElementTable& t, std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  detail::SubgroupClosure c(t);
  for (Index x : elements) {
    if (c.size() == elements.size()) break;
    c.add(x);
  }
  if (c.size() != elements.size()) throw Error("element set is not a subgroup");
  return c.record(is_normal(t, elements));
}

bool is_normal(const ElementTable& t, std::span<const Index> sorted_elements) {
  std::vector<char> member(t.size(), 0);
  for (Index x : sorted_elements) member[x] = 1;
  for (Index x : sorted_elements)
    for (Index g : t.generator_indices())
      if (!member[t.conjugate(x, g)]) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& g, std::vector<Permutation> elements) {
  std::vector<Permutation> gens;
  for (auto& e : elements)
    if (!e.is_identity()) gens.push_back(std::move(e));
  PermGroup n(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation c = conjugate(gens[i], x);
      if (!n.contains(c)) {
        gens.push_back(std::move(c));
        n = PermGroup(g.degree(), gens);
      }
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = compose(compose(gens[i].inverse(), gens[j].inverse()),
                              compose(gens[i], gens[j]));
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, std::move(comms));
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (series.back().order() > 1) {
    PermGroup d = derived_subgroup(series.back());
    if (d.order() == series.back().order()) break;
    series.push_back(std::move(d));
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().order() == 1; }

std::vector<SubgroupRecord> normal_subgroups(const ElementTable& t) {
  using detail::SubgroupClosure;
  std::map<std::vector<Index>, SubgroupClosure> found;
  {
    SubgroupClosure trivial(t);
    found.emplace(trivial.sorted_elements(), std::move(trivial));
  }
  for (const auto& cls : conjugacy_classes(t)) {
    if (cls.representative_index == t.identity()) continue;
    SubgroupClosure c(t);
    for (Index x : cls.member_indices) c.add(x);
    auto key = c.sorted_elements();
    found.emplace(std::move(key), std::move(c));
  }
  // joins of normal subgroups are normal; close the set under pairwise joins
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<const SubgroupClosure*> current;
    for (const auto& [k, v] : found) current.push_back(&v);
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        const auto& a = *current[i];
        const auto& b = *current[j];
        if (a.contains_all(b) || b.contains_all(a)) continue;
        SubgroupClosure c = a;
        for (Index g : b.generators()) c.add(g);
        auto key = c.sorted_elements();
        if (!found.count(key)) {
          found.emplace(std::move(key), std::move(c));
          grew = true;
        }
      }
  }
  std::vector<SubgroupRecord> out;
  for (const auto& [k, v] : found) out.push_back(v.record(true));
  std::stable_sort(out.begin(), out.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

PermGroup quotient(const ElementTable& t, const SubgroupRecord& n) {
  if (!is_normal(t, n.elements)) throw NotNormalError("subgroup is not normal; no quotient");
  const std::size_t size = t.size();
  std::vector<std::int64_t> coset(size, -1);
  std::vector<Index> reps;
  for (Index x = 0; x < size; ++x) {
    if (coset[x] >= 0) continue;
    for (Index m : n.elements) coset[t.multiply(m, x)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
  }
  const std::size_t degree = reps.size();
  std::vector<Permutation> gens;
  for (Index g : t.generator_indices()) {
    std::vector<Point> img(degree);
    for (std::size_t c = 0; c < degree; ++c)
      img[c] = static_cast<Point>(coset[t.multiply(reps[c], g)]);
    gens.push_back(Permutation(std::move(img)));
  }
  std::string name = t.group().name().empty() ? std::string() : t.group().name() + "/N";
  return PermGroup(degree, std::move(gens), std::move(name));
}

namespace {

Permutation embed(const Permutation& p, std::size_t offset, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < p.degree(); ++i)
    img[offset + i] = static_cast<Point>(offset + p[i]);
  return Permutation::adopt(std::move(img));
}

}  // namespace

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators())
    if (!g.is_identity()) gens.push_back(embed(g, 0, degree));
  for (const auto& g : b.generators())
    if (!g.is_identity()) gens.push_back(embed(g, a.degree(), degree));
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = "DP(" + a.name() + "," + b.name() + ")";
  return PermGroup(degree, std::move(gens), std::move(name));
}

PermGroup direct_power(const PermGroup& h, std::size_t k) {
  if (k == 0) throw Error("direct power needs k >= 1");
  const std::size_t degree = h.degree() * k;
  std::vector<Permutation> gens;
  for (std::size_t c = 0; c < k; ++c)
    for (const auto& g : h.generators())
      if (!g.is_identity()) gens.push_back(embed(g, c * h.degree(), degree));
  std::string name;
  if (!h.name().empty()) name = "POW(" + h.name() + "," + std::to_string(k) + ")";
  return PermGroup(degree, std::move(gens), std::move(name));
}

SubgroupRecord centralizer(const ElementTable& t, std::span<const Index> s) {
  std::vector<Index> members;
  for (Index x = 0; x < t.size(); ++x) {
    bool ok = true;
    for (Index y : s)
      if (t.multiply(x, y) != t.multiply(y, x)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(x);
  }
  return subgroup_from_elements(t, std::move(members));
}

SubgroupRecord center(const ElementTable& t) {
  return centralizer(t, t.generator_indices());
}

namespace {

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

SubgroupRecord sylow_subgroup(const ElementTable& t, std::uint64_t p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  const std::uint64_t n = t.size();
  if (n % p != 0)
    throw Error("prime " + std::to_string(p) + " does not divide group order " +
                std::to_string(n));
  std::uint64_t ppart = 1;
  for (std::uint64_t m = n; m % p == 0; m /= p) ppart *= p;

  Index start = t.identity();
  std::uint64_t best = 1;
  for (Index x = 0; x < n; ++x) {
    std::uint64_t o = t.element_order(x);
    if (o > best && is_p_power(o, p)) {
      best = o;
      start = x;
    }
  }
  detail::SubgroupClosure sub(t);
  sub.add(start);
  while (sub.size() < ppart) {
    // p divides [N(P):P] while P is not Sylow, so a p-element of N(P)\P exists
    bool extended = false;
    for (Index z = 0; z < n && !extended; ++z) {
      if (sub.contains(z) || !is_p_power(t.element_order(z), p)) continue;
      bool normalizes = true;
      for (Index g : sub.generators())
        if (!sub.contains(t.conjugate(g, z))) {
          normalizes = false;
          break;
        }
      if (normalizes) {
        sub.add(z);
        extended = true;
      }
    }
    if (!extended) throw Error("Sylow ascending chain stalled");
  }
  return sub.record(is_normal(t, sub.sorted_elements()));
}

bool is_simple(const ElementTable& t) {
  return t.size() > 1 && normal_subgroups(t).size() == 2;
}

bool is_elementary_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  std::uint64_t exponent = 1;
  for (const auto& x : gens) exponent = std::lcm(exponent, x.order());
  return is_prime(exponent);
}

std::set<std::uint64_t> prime_set(const PermGroup& g) {
  std::set<std::uint64_t> out;
  for (auto [p, e] : factorize(g.order())) out.insert(p);
  return out;
}

std::set<std::uint64_t> spectrum(const ElementTable& t) {
  std::set<std::uint64_t> out;
  for (Index x = 0; x < t.size(); ++x) out.insert(t.element_order(x));
  return out;
}

std::uint64_t graph_order(std::span<const Permutation> src, std::span<const Permutation> dst) {
  if (src.size() != dst.size() || src.empty())
    throw Error("graph_order needs equally many source and image generators");
  const std::size_t ds = src[0].degree(), dd = dst[0].degree();
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::vector<Point> img(ds + dd);
    for (std::size_t p = 0; p < ds; ++p) img[p] = src[i][p];
    for (std::size_t p = 0; p < dd; ++p) img[ds + p] = static_cast<Point>(ds + dst[i][p]);
    gens.push_back(Permutation::adopt(std::move(img)));
  }
  return PermGroup(ds + dd, std::move(gens)).order();
}

}  // namespace autorbit
