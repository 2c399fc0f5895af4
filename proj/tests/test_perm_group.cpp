#include <random>

#include "autorbit/catalog.hpp"
#include "autorbit/element_table.hpp"
#include "autorbit/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace autorbit;

TEST_SUITE("perm_group") {

TEST_CASE("orders of standard groups") {
  CHECK(catalog::build("S4").order() == 24);
  CHECK(catalog::build("A5").order() == 60);
  CHECK(catalog::build("S7").order() == 5040);
  CHECK(catalog::build("A12").order() == 239500800);
  CHECK(PermGroup(5, {}).order() == 1);
  CHECK_THROWS_AS(PermGroup(0, {}), Error);
  CHECK_THROWS_AS(PermGroup(3, {Permutation(4)}), DegreeMismatch);
}

TEST_CASE("membership") {
  auto a5 = catalog::build("A5");
  CHECK(a5.contains(Permutation::from_cycles("(1 2 3)", 5)));
  CHECK_FALSE(a5.contains(Permutation::from_cycles("(1 2)", 5)));
  CHECK_THROWS_AS(a5.contains(Permutation(6)), DegreeMismatch);
}

TEST_CASE("base points are the smallest moved points") {
  auto s4 = catalog::build("S4");
  CHECK(s4.bsgs().base() == std::vector<Point>{0, 1, 2});
}

TEST_CASE("stabilizer chain order agrees with closure") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<Permutation> gens;
    for (unsigned k = 0; k < 1 + rng() % 3; ++k) {
      std::vector<Point> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
      std::shuffle(v.begin(), v.end(), rng);
      gens.push_back(Permutation(v));
    }
    PermGroup g(n, gens);
    CHECK(g.order() == oracle::closure(gens, n).size());
  }
}

TEST_CASE("element table") {
  ElementTable t(catalog::build("S4"));
  REQUIRE(t.size() == 24);
  CHECK(t.has_product_table());
  CHECK(t.permutation(t.identity()).is_identity());
  for (Index a = 0; a < t.size(); ++a) {
    CHECK(t.multiply(a, t.inverse(a)) == t.identity());
    CHECK(t.index_of(t.permutation(a)) == a);
  }
  // sorted by image sequence
  for (Index a = 1; a < t.size(); ++a) CHECK(t.permutation(a - 1) < t.permutation(a));
  CHECK_FALSE(t.find(Permutation::from_cycles("(1 2)", 5)).has_value());
  CHECK_THROWS_AS(ElementTable(catalog::build("S6"), 100), CapacityError);
}

}  // TEST_SUITE
