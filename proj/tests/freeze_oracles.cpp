// Regenerates tests/oracle_values.inc from the brute-force oracles.
// Usage: freeze_oracles > tests/oracle_values.inc

#include <iostream>

#include "autorbit/catalog.hpp"
#include "oracles.hpp"
#include "small_groups.hpp"

int main() {
  std::cout << "// Generated by freeze_oracles from the brute-force oracles. Do not edit.\n";
  std::cout << "// name, order, |Aut|, omega, classes, normal subgroup orders, spectrum\n";
  for (const auto& g : test_groups::small_named()) {
    oracle::Table t(g.group.generators(), g.group.degree());
    const auto auts = oracle::automorphisms_by_tuples(t);
    const auto orbs = oracle::orbits(t, auts);

    // conjugacy classes by direct conjugation
    std::set<std::set<int>> classes;
    for (int x = 0; x < t.size(); ++x) {
      std::set<int> c;
      for (int y = 0; y < t.size(); ++y) {
        int yinv = 0;
        while (t.product[y][yinv] != t.identity) ++yinv;
        c.insert(t.product[t.product[yinv][x]][y]);
      }
      classes.insert(c);
    }

    std::vector<std::size_t> normal_orders;
    if (t.size() <= 60)
      for (const auto& n : oracle::normal_subgroups(t)) normal_orders.push_back(n.size());
    std::sort(normal_orders.begin(), normal_orders.end());

    std::set<std::uint64_t> spec;
    for (const auto& e : t.elems) spec.insert(autorbit::Permutation(e).order());

    std::cout << "{\"" << g.name << "\", " << t.size() << ", " << auts.size() << ", "
              << orbs.size() << ", " << classes.size() << ", {";
    for (std::size_t i = 0; i < normal_orders.size(); ++i)
      std::cout << (i ? ", " : "") << normal_orders[i];
    std::cout << "}, {";
    bool first = true;
    for (auto s : spec) {
      std::cout << (first ? "" : ", ") << s;
      first = false;
    }
    std::cout << "}},\n";
  }
}
