#include "doctest.h"
#include "kribbon/laurent.hpp"

using namespace kribbon;

TEST_SUITE("laurent") {
  TEST_CASE("arithmetic normalizes terms") {
    Laurent a = Laurent::monomial(1, 1, 0), z = Laurent::monomial(1, 0, 1);
    CHECK((a - a).is_zero());
    CHECK((a + z).size() == 2);
    Laurent p = (a + z) * (a - z);
    CHECK(p == a * a - z * z);
    CHECK(Laurent::monomial(0, 3, 3).is_zero());
    CHECK(Laurent(5) * Laurent::monomial(2, -1, 2) == Laurent::monomial(10, -1, 2));
  }

  TEST_CASE("degrees and coefficients") {
    Laurent p = Laurent::monomial(-1, -4, 0) + Laurent::monomial(2, -2, 0) + Laurent::monomial(1, -2, 2);
    CHECK(p.max_a() == -2);
    CHECK(p.min_a() == -4);
    auto top = p.a_coefficient(-2);
    REQUIRE(top.size() == 2);
    CHECK(top[0].first == 0);
    CHECK(top[0].second == 2);
    CHECK(top[1].first == 2);
    CHECK(p.a_coefficient(7).empty());
  }

  TEST_CASE("delta") {
    Laurent d = delta();
    CHECK(d == Laurent::monomial(1, 1, -1) - Laurent::monomial(1, -1, -1));
    CHECK(delta_power(0) == Laurent(1));
    CHECK(delta_power(3) == d * d * d);
  }

  TEST_CASE("mirror substitution is an involution") {
    Laurent p = Laurent::monomial(3, -3, 1) + Laurent::monomial(-2, 2, 0) + Laurent::monomial(1, 1, 5);
    CHECK(mirror_substitute(mirror_substitute(p)) == p);
    CHECK(mirror_substitute(Laurent::monomial(1, 1, 0)) == Laurent::monomial(-1, -1, 0));
  }

  TEST_CASE("json round trip keeps big coefficients") {
    Integer big = Integer(1) << 90;
    Laurent p = Laurent::monomial(big, -7, 3) - Laurent::monomial(4, 2, -1);
    CHECK(Laurent::from_json(p.to_json()) == p);
    CHECK(Laurent::from_json("[]").is_zero());
    CHECK_THROWS(Laurent::from_json("[[1,2]]"));
  }

  TEST_CASE("printing") {
    CHECK(Laurent().to_string() == "0");
    CHECK(Laurent::monomial(-1, -4, 0).to_string() == "-a^-4");
    CHECK((Laurent::monomial(2, -2, 0) + Laurent::monomial(1, -2, 2)).to_string() == "2*a^-2 + a^-2*z^2");
    CHECK(Laurent(7).to_string() == "7");
  }
}
