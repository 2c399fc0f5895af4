#pragma once

#include <string>
#include <vector>

#include "autorbit/catalog.hpp"

namespace test_groups {

struct Named {
  std::string name;
  autorbit::PermGroup group;
};

inline autorbit::PermGroup from_cycles(std::size_t degree, std::vector<std::string> cycles,
                                       std::string name) {
  std::vector<autorbit::Permutation> gens;
  for (const auto& c : cycles) gens.push_back(autorbit::Permutation::from_cycles(c, degree));
  return autorbit::PermGroup(degree, gens, std::move(name));
}

/// Groups of order at most 60 used for oracle comparisons.
inline std::vector<Named> small_named() {
  std::vector<Named> out;
  for (const char* n : {"C1", "C2", "C3", "C4", "C6", "E2^2", "E2^3", "E2^4", "E3^2", "E5^1", "S3",
                        "A4", "S4", "DP(C2,C4)", "A5", "PSL2(4)", "PSL2(5)"})
    out.push_back({n, autorbit::catalog::build(n)});
  out.push_back({"Q8", from_cycles(8, {"(1 2 4 6)(3 8 7 5)", "(1 3 4 7)(2 5 6 8)"}, "Q8")});
  out.push_back({"D8", from_cycles(4, {"(1 2 3 4)", "(1 3)"}, "D8")});
  out.push_back({"D10", from_cycles(5, {"(1 2 3 4 5)", "(2 5)(3 4)"}, "D10")});
  out.push_back({"C3:C4", from_cycles(7, {"(1 2 3)", "(2 3)(4 5 6 7)"}, "C3:C4")});
  out.push_back({"AGL1(5)", from_cycles(5, {"(1 2 3 4 5)", "(2 3 5 4)"}, "AGL1(5)")});
  out.push_back({"AGL1(8)", from_cycles(8, {"(1 2)(3 4)(5 6)(7 8)", "(2 3 5 4 7 8 6)"}, "AGL1(8)")});
  return out;
}

}  // namespace test_groups
