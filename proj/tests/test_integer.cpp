#include <doctest.h>

#include <limits>

#include "oracles.hpp"
#include "semimod/error.hpp"
#include "semimod/integer.hpp"

using namespace semimod;

TEST_CASE("checked arithmetic detects overflow") {
  Int const big = std::numeric_limits<Int>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  CHECK(checked_sub(3, 10) == -7);
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), OverflowError);
}

TEST_CASE("exact_div refuses remainders") {
  CHECK(exact_div(35, 5, "test") == 7);
  CHECK_THROWS_AS(exact_div(36, 5, "test"), InternalError);
}

TEST_CASE("mod_floor and mod_inverse") {
  CHECK(mod_floor(-1, 5) == 4);
  CHECK(mod_floor(12, 5) == 2);
  for (Int m = 2; m < 30; ++m) {
    for (Int x = 1; x < m; ++x) {
      if (std::gcd(x, m) != 1) {
        CHECK_THROWS_AS(mod_inverse(x, m), InvalidInput);
        continue;
      }
      CHECK(mod_floor(x * mod_inverse(x, m), m) == 1);
    }
  }
}

TEST_CASE("binomial matches Pascal's triangle") {
  for (Int n = 0; n <= 40; ++n) {
    for (Int k = -1; k <= n + 1; ++k) {
      CHECK(binomial(n, k) == oracle::binom(n, k));
    }
  }
  CHECK(binomial(62, 31) == 465428353255261088LL);
  CHECK_THROWS_AS(binomial(100, 50), OverflowError);
  CHECK_THROWS(binomial(-1, 0));
}

TEST_CASE("divisors and mobius") {
  CHECK(divisors(12) == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<Int>{1});
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  // sum of mu over divisors vanishes for n > 1
  for (Int n = 2; n < 200; ++n) {
    int s = 0;
    for (Int d : divisors(n)) s += mobius(d);
    CHECK(s == 0);
  }
  CHECK(divides(5, 35));
  CHECK_FALSE(divides(2, 35));
}
