#include "autorbit/catalog.hpp"
#include "autorbit/error.hpp"
#include "autorbit/field.hpp"
#include "autorbit/structure.hpp"
#include "doctest.h"

using namespace autorbit;

TEST_SUITE("catalog") {

TEST_CASE("finite fields") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    FieldTable f(q);
    CHECK(f.powers().size() == q - 1);
    CHECK(f.pow(f.primitive(), q - 1) == 1);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b)
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
  }
  FieldTable f4(4);
  CHECK(f4.mul(2, 2) == 3);  // x^2 = x + 1
  CHECK(f4.mul(2, 3) == 1);
  FieldTable f9(9);
  CHECK(f9.characteristic() == 3);
  CHECK(f9.degree() == 2);
  CHECK_THROWS_AS(FieldTable(6), Error);
}

TEST_CASE("catalog orders match closed forms") {
  const std::vector<std::pair<const char*, std::uint64_t>> expect = {
      {"C1", 1},          {"C6", 6},           {"E2^4", 16},        {"E3^2", 9},
      {"S3", 6},          {"A4", 12},          {"S6", 720},         {"A6", 360},
      {"PSL2(4)", 60},    {"PSL2(5)", 60},     {"PSL2(7)", 168},    {"PSL2(8)", 504},
      {"PSL2(9)", 360},   {"PGL2(7)", 336},    {"PGL2(9)", 720},    {"PSigmaL2(9)", 720},
      {"PGammaL2(8)", 1512}, {"PGammaL2(9)", 1440}, {"M10", 720},   {"PSL3(4)", 20160},
      {"ASL24A", 960},    {"ASL24B", 960},     {"DP(A5,C7)", 420},  {"POW(A5,2)", 3600},
      {"DP(A5, DP(C2,C3))", 360}};
  for (const auto& [name, order] : expect) {
    CAPTURE(name);
    auto d = catalog::describe(name);
    CHECK(d.order == order);
    CHECK(d.group().order() == order);
    CHECK(catalog::expected_order(name) == order);
    CHECK_FALSE(d.provenance.empty());
  }
}

TEST_CASE("names are normalised") {
  CHECK(catalog::describe(" PSL2( 7 ) ").name == "PSL2(7)");
  CHECK(catalog::describe("DP(A5, C7)").name == "DP(A5,C7)");
  CHECK(catalog::build("POW(C2,3)").name() == "POW(C2,3)");
}

TEST_CASE("unknown names") {
  for (const char* bad : {"", "X5", "PSL2(11)", "PSL3(3)", "E4^2", "DP(A5)", "POW(A5,0)", "A0",
                          "C99999", "A5x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(catalog::describe(bad), UnknownGroupError);
  }
}

TEST_CASE("spectra of the simple groups") {
  auto spec = [](const char* name) { return spectrum(ElementTable(catalog::build(name))); };
  CHECK(spec("A5") == std::set<std::uint64_t>{1, 2, 3, 5});
  CHECK(spec("A6") == std::set<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(spec("PSL2(7)") == std::set<std::uint64_t>{1, 2, 3, 4, 7});
  CHECK(spec("PSL2(8)") == std::set<std::uint64_t>{1, 2, 3, 7, 9});
  CHECK(spec("PSL3(4)") == std::set<std::uint64_t>{1, 2, 3, 4, 5, 7});
}

TEST_CASE("index-two overgroups of PSL2(9) are told apart by their spectra") {
  auto over = catalog::psl2_9_index_two_overgroups();
  REQUIRE(over.size() == 3);
  auto pgl = spectrum(ElementTable(over[0]));
  auto sigma = spectrum(ElementTable(over[1]));
  auto m10 = spectrum(ElementTable(over[2]));
  CHECK(pgl.count(10));
  CHECK(sigma.count(6));
  CHECK(m10.count(8));
  CHECK_FALSE(m10.count(6));
  CHECK_FALSE(m10.count(10));
  CHECK(isomorphic(over[1], catalog::build("S6")));
}

TEST_CASE("extension families") {
  auto a5 = catalog::extension_family("A5");
  REQUIRE(a5.size() == 4);
  CHECK(a5[0].name == "S5");
  CHECK(spectrum(ElementTable(a5[0].group)).size() == 6);
  CHECK(spectrum(ElementTable(a5[3].group)) == std::set<std::uint64_t>{1, 2, 3, 5, 10, 15});

  auto l28 = catalog::extension_family("PSL2(8)");
  std::vector<std::string> seven;
  for (const auto& m : l28)
    if (m.prime == 7) seven.push_back(m.name);
  CHECK(seven == std::vector<std::string>{"DP(PSL2(8),C7)"});
  CHECK(catalog::extension_family("A6").size() == 6);
  CHECK_THROWS_AS(catalog::extension_family("A7"), UnknownGroupError);
  for (const char* n : {"A5", "A6", "PSL2(7)", "PSL2(8)"})
    for (const auto& m : catalog::extension_family(n))
      CHECK(m.group.order() == m.prime * catalog::expected_order(n));
}

}  // TEST_SUITE
