#include <numeric>

#include "autorbit/catalog.hpp"
#include "autorbit/error.hpp"
#include "autorbit/structure.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "small_groups.hpp"

using namespace autorbit;

namespace {

std::vector<std::uint64_t> class_sizes(const PermGroup& g) {
  ElementTable t(g);
  std::vector<std::uint64_t> out;
  for (const auto& c : conjugacy_classes(t)) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup q8() { return test_groups::from_cycles(8, {"(1 2 4 6)(3 8 7 5)", "(1 3 4 7)(2 5 6 8)"}, "Q8"); }

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(catalog::build("A5")) == std::vector<std::uint64_t>{1, 12, 12, 15, 20});
  CHECK(class_sizes(catalog::build("S4")) == std::vector<std::uint64_t>{1, 3, 6, 6, 8});
  CHECK(class_sizes(catalog::build("PSL2(7)")) == std::vector<std::uint64_t>{1, 21, 24, 24, 42, 56});
}

TEST_CASE("class equation on every small group") {
  for (const auto& g : test_groups::small_named()) {
    ElementTable t(g.group);
    std::uint64_t total = 0;
    for (const auto& c : conjugacy_classes(t)) {
      total += c.size;
      CHECK(t.size() % c.size == 0);
    }
    CHECK(total == t.size());
  }
}

TEST_CASE("solvability") {
  CHECK(is_solvable(catalog::build("S4")));
  CHECK_FALSE(is_solvable(catalog::build("A5")));
  CHECK(derived_series(catalog::build("S4")).size() == 4);  // S4 > A4 > V4 > 1
  CHECK(derived_subgroup(catalog::build("S5")).order() == 60);
}

TEST_CASE("normal subgroups agree with the subgroup scan") {
  for (const auto& g : test_groups::small_named()) {
    if (g.group.order() > 48) continue;
    ElementTable t(g.group);
    oracle::Table ot(g.group.generators(), g.group.degree());
    auto expect = oracle::normal_subgroups(ot);
    auto got = normal_subgroups(t);
    REQUIRE(got.size() == expect.size());
    std::set<std::set<oracle::Images>> a, b;
    for (const auto& n : expect) {
      std::set<oracle::Images> s;
      for (int x : n) s.insert(ot.elems[x]);
      a.insert(s);
    }
    for (const auto& n : got) {
      std::set<oracle::Images> s;
      for (Index x : n.elements) {
        auto span = t.element(x);
        s.insert(oracle::Images(span.begin(), span.end()));
      }
      b.insert(s);
      CHECK(n.is_normal);
    }
    CHECK(a == b);
  }
}

TEST_CASE("S4 normal subgroups") {
  ElementTable t(catalog::build("S4"));
  std::vector<std::uint64_t> orders;
  for (const auto& n : normal_subgroups(t)) orders.push_back(n.order());
  CHECK(orders == std::vector<std::uint64_t>{1, 4, 12, 24});
}

TEST_CASE("quotients") {
  ElementTable t(catalog::build("S4"));
  auto normals = normal_subgroups(t);
  PermGroup q = quotient(t, normals[1]);  // S4 / V4
  CHECK(q.order() == 6);
  CHECK(isomorphic(q, catalog::build("S3")));
  CHECK(quotient(t, normals.back()).order() == 1);

  auto sub = subgroup_from_elements(t, subgroup_elements(t, std::vector<Index>{
                                                               t.index_of(Permutation::from_cycles("(1 2)", 4))}));
  CHECK_FALSE(sub.is_normal);
  CHECK_THROWS_AS(quotient(t, sub), NotNormalError);
}

TEST_CASE("quotient of the affine group by its translations") {
  ElementTable t(catalog::build("ASL24A"));
  for (const auto& n : normal_subgroups(t))
    if (n.order() == 16) CHECK(isomorphic(quotient(t, n), catalog::build("A5")));
}

TEST_CASE("direct products") {
  auto g = direct_product(catalog::build("A5"), catalog::build("C7"));
  CHECK(g.order() == 420);
  CHECK(g.degree() == 12);
  CHECK(prime_set(g) == std::set<std::uint64_t>{2, 3, 5, 7});
  CHECK(direct_power(catalog::build("A5"), 2).order() == 3600);
  CHECK(prime_set(direct_power(catalog::build("PSL2(7)"), 2)).size() >= 3);
}

TEST_CASE("centralizers, centres, Sylow subgroups") {
  ElementTable q(q8());
  CHECK(center(q).order() == 2);
  CHECK(center(ElementTable(catalog::build("A5"))).order() == 1);
  ElementTable s3(catalog::build("S3"));
  const Index r = s3.index_of(Permutation::from_cycles("(1 2 3)", 3));
  CHECK(centralizer(s3, std::vector<Index>{r}).order() == 3);

  ElementTable a5(catalog::build("A5"));
  auto p5 = sylow_subgroup(a5, 5);
  CHECK(p5.order() == 5);
  CHECK(sylow_subgroup(a5, 2).order() == 4);
  CHECK_FALSE(sylow_subgroup(a5, 2).is_normal);
  CHECK(sylow_subgroup(ElementTable(catalog::build("PSL2(8)")), 3).order() == 9);
  CHECK_THROWS_AS(sylow_subgroup(a5, 7), Error);
  // a Sylow 2-subgroup of PSL2(7) is dihedral of order 8, not cyclic
  ElementTable l27(catalog::build("PSL2(7)"));
  auto s2 = sylow_subgroup(l27, 2);
  CHECK(s2.order() == 8);
  std::uint64_t max_order = 0;
  for (Index x : s2.elements) max_order = std::max(max_order, l27.element_order(x));
  CHECK(max_order == 4);
}

TEST_CASE("spectra and simplicity") {
  CHECK(spectrum(ElementTable(catalog::build("S5"))) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(is_simple(ElementTable(catalog::build("A5"))));
  CHECK(is_simple(ElementTable(catalog::build("C5"))));
  CHECK_FALSE(is_simple(ElementTable(catalog::build("S5"))));
  CHECK_FALSE(is_simple(ElementTable(catalog::build("C1"))));
  CHECK(is_elementary_abelian(catalog::build("E3^2")));
  CHECK_FALSE(is_elementary_abelian(catalog::build("C4")));
}

TEST_CASE("isomorphism") {
  CHECK(isomorphic(catalog::build("A5"), catalog::build("PSL2(4)")));
  CHECK(isomorphic(catalog::build("A5"), catalog::build("PSL2(5)")));
  CHECK(isomorphic(catalog::build("A6"), catalog::build("PSL2(9)")));
  CHECK(isomorphic(catalog::build("S6"), catalog::build("PSigmaL2(9)")));
  CHECK(isomorphic(catalog::build("PSL2(7)"), catalog::build("PSL2(7)")));
  CHECK_FALSE(isomorphic(catalog::build("S4"), catalog::build("DP(A4,C2)")));
  CHECK_FALSE(isomorphic(q8(), catalog::build("DP(C2,C4)")));
  CHECK_FALSE(isomorphic(catalog::build("PGL2(9)"), catalog::build("M10")));
  CHECK_FALSE(isomorphic(catalog::build("ASL24A"), catalog::build("ASL24B")));
  auto w = find_isomorphism(ElementTable(catalog::build("A5")), ElementTable(catalog::build("PSL2(5)")));
  REQUIRE(w.has_value());
  CHECK(w->graph_order == 60);
}

TEST_CASE("number theory helpers") {
  CHECK(factorize(20160) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 2}, {5, 1}, {7, 1}});
  CHECK(factorize(1).empty());
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}

}  // TEST_SUITE
