#include <random>

#include "autorbit/error.hpp"
#include "autorbit/permutation.hpp"
#include "doctest.h"

using namespace autorbit;

TEST_SUITE("permutation") {

TEST_CASE("cycle strings round-trip") {
  auto p = Permutation::from_cycles("(1 2 3)(4 5)", 5);
  CHECK(p.to_cycles() == "(1 2 3)(4 5)");
  CHECK(Permutation::from_cycles(p.to_cycles(), 5) == p);
  CHECK(p.to_image_list() == "[2,3,1,5,4]");
  CHECK(p.order() == 6);
  CHECK(Permutation::from_cycles("()", 3).is_identity());
  CHECK(Permutation::from_cycles("", 3).to_cycles() == "()");
}

TEST_CASE("image lists") {
  auto p = Permutation::from_images({2, 3, 1});
  CHECK(p == Permutation::from_cycles("(1 2 3)", 3));
  CHECK_THROWS_AS(Permutation::from_images({2, 1, 1, 4}), ParseError);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), ParseError);
}

TEST_CASE("malformed cycles are rejected") {
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2 2)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("1 2)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 x)", 3), ParseError);
}

TEST_CASE("products act on the right") {
  auto a = Permutation::from_cycles("(1 2)", 3);
  auto b = Permutation::from_cycles("(2 3)", 3);
  // 1 -a-> 2 -b-> 3
  CHECK(compose(a, b)[0] == 2);
  CHECK(a * b == Permutation::from_cycles("(1 3 2)", 3));
  CHECK(conjugate(a, b) == Permutation::from_cycles("(1 3)", 3));
  CHECK(power(a * b, 3).is_identity());
  CHECK(power(a * b, -1) == (a * b).inverse());
  CHECK_THROWS_AS(compose(a, Permutation(4)), DegreeMismatch);
}

TEST_CASE("group laws on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    auto random_perm = [&] {
      std::vector<Point> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
      std::shuffle(v.begin(), v.end(), rng);
      return Permutation(v);
    };
    auto p = random_perm(), q = random_perm(), r = random_perm();
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
    CHECK(power(p, static_cast<std::int64_t>(p.order())).is_identity());
    CHECK(Permutation::from_cycles(p.to_cycles(), n) == p);
  }
}

}  // TEST_SUITE
