#include "monocat/catalog.hpp"

#include "doctest.h"

using namespace monocat;

TEST_CASE("monoid census sizes") {
  CHECK(monoid_census(1).size() == 1);
  CHECK(monoid_census(2).size() == 2);
  CHECK(monoid_census(3).size() == 7);
}

TEST_CASE("census tables are valid, canonical and distinct") {
  for (Elem n = 1; n <= 3; ++n) {
    auto ms = monoid_census(n);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      CHECK(ms[i].identity == 0);
      CHECK_NOTHROW(validate_monoid(ms[i].table, ms[i].size, ms[i].identity));
      for (std::size_t j = i + 1; j < ms.size(); ++j) CHECK(ms[i].table != ms[j].table);
    }
  }
}

TEST_CASE("catalog contents") {
  const auto& entries = catalog();
  CHECK(entries.size() == 14);  // z1 + 2 + 7 + z4 z5 z6 klein4
  CHECK(entries.front().name == "z1");
  CHECK(entries.back().name == "klein4");

  CHECK(catalog_find("z1") != nullptr);
  CHECK(catalog_find("z4")->size == 4);
  CHECK(catalog_find("nope") == nullptr);

  // aliases resolve to the census entries with the cyclic tables
  const FiniteMonoid* z2 = catalog_find("z2");
  REQUIRE(z2 != nullptr);
  CHECK(*z2 == cyclic_group(2));
  const FiniteMonoid* z3 = catalog_find("z3");
  REQUIRE(z3 != nullptr);
  CHECK(*z3 == cyclic_group(3));
}

TEST_CASE("klein four group") {
  const FiniteMonoid k4 = klein_four();
  CHECK(is_group(k4));
  CHECK(is_commutative(k4));
  for (Elem x = 0; x < 4; ++x) CHECK(k4.mul(x, x) == 0);  // not cyclic
}
