#include "doctest.h"
#include "oracle.hpp"

using namespace finlang;

TEST_SUITE("oracle") {
  TEST_CASE("finite field axioms") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
      CAPTURE(q);
      Fq const f(q);
      CHECK(f.q() == q);
      for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, f.zero()) == a);
        CHECK(f.mul(a, f.one()) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (int b = 0; b < q; ++b) {
          CHECK(f.add(a, b) == f.add(b, a));
          CHECK(f.mul(a, b) == f.mul(b, a));
          for (int c = 0; c < q; ++c) {
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
          }
        }
      }
      // The generator has order q - 1.
      for (int k = 1; k < q - 1; ++k) CHECK(f.power_of_generator(k) != 1);
      CHECK(f.power_of_generator(q - 1) == 1);
    }
  }

  TEST_CASE("group orders match the classical formulas") {
    for (auto const& name : oracle_group_names())
      for (int q : {2, 3, 4}) {
        if ((name == "sp4" || name == "so5") && q > 3) continue;
        if (name == "so5" && q % 2 == 0) continue;
        CAPTURE(name);
        CAPTURE(q);
        CHECK(build_group(name, q).order() == expected_order(name, static_cast<std::uint64_t>(q)));
      }
  }

  TEST_CASE("class counts") {
    CHECK(class_count(build_group("sl2", 3)) == 7);
    CHECK(class_count(build_group("gl2", 3)) == 8);
    CHECK(class_count(build_group("pgl2", 3)) == 5);
    CHECK(class_count(build_group("gl2", 2)) == 3);
    CHECK(class_count(build_group("o2", 3)) == 4);
    CHECK(class_count(build_group("sl3", 2)) == 6);
    for (int q : {2, 3, 4, 5, 7}) CHECK(class_count(build_group("torus1", q)) == static_cast<std::size_t>(q - 1));
  }

  TEST_CASE("class counts of the rank two groups" * doctest::timeout(300)) {
    CHECK(class_count(build_group("sp4", 3)) == 34);
    CHECK(class_count(build_group("so5", 3)) == 25);
  }
}
