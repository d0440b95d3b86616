#include "cy3/errors.hpp"
#include "cy3/exact.hpp"

#include <doctest.h>

using namespace cy3;

TEST_CASE("rationals are kept in lowest terms") {
    const Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(make_rational(1053, 6)) == "351/2");
    CHECK(is_integral(make_rational(12, 4)));
    CHECK_THROWS_AS(make_rational(1, 0), ArgumentError);
}

TEST_CASE("integer literals") {
    CHECK(parse_integer("-243") == -243);
    CHECK(parse_integer("+7") == 7);
    CHECK(to_string(parse_integer("123456789012345678901234567890")) ==
          "123456789012345678901234567890");
    CHECK_THROWS_AS(parse_integer(""), LoadError);
    CHECK_THROWS_AS(parse_integer("-"), LoadError);
    CHECK_THROWS_AS(parse_integer("12a"), LoadError);
}

TEST_CASE("no overflow at large magnitudes") {
    Integer big = 1;
    for (int i = 0; i < 100; ++i) {
        big *= 1000003;
    }
    CHECK(big / 1000003 * 1000003 == big);
    CHECK(mod_floor(big + 1, 1000003) == 1);
}

TEST_CASE("mod_floor returns the least non-negative residue") {
    CHECK(mod_floor(-4, 6) == 2);
    CHECK(mod_floor(-9, 6) == 3);
    CHECK(mod_floor(7, -3) == 1);
    CHECK_THROWS_AS(mod_floor(1, 0), ArgumentError);
    CHECK(divides(6, -30));
    CHECK_FALSE(divides(6, -4));
    CHECK(divides(0, 0));
}

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(9));
    CHECK(is_prime(1000003));
    CHECK(is_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
}
