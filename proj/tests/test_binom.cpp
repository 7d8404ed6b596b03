#include <catch2/catch_amalgamated.hpp>

#include "lrslab/binom.hpp"
#include "oracles.hpp"

using namespace lrslab;

TEST_CASE("binom_int worked values, including negative upper index") {
  REQUIRE(binom_int(0, 0) == 1);
  REQUIRE(binom_int(4, 0) == 1);
  REQUIRE(binom_int(-3, 0) == 1);
  REQUIRE(binom_int(5, 2) == 10);
  REQUIRE(binom_int(3, 5) == 0);
  REQUIRE(binom_int(-1, 2) == 1);
  REQUIRE(binom_int(-1, 3) == -1);
  REQUIRE(binom_int(-2, 3) == -4);
  REQUIRE(binom_int(2, -1) == 0);
}

TEST_CASE("reflection identity C(n,j) = (-1)^j C(-n+j-1, j)") {
  for (i64 n = -12; n <= 12; ++n)
    for (i64 j = 0; j <= 10; ++j) {
      i64 sign = (j % 2 == 0) ? 1 : -1;
      REQUIRE(binom_int(n, j) == sign * binom_int(-n + j - 1, j));
    }
}

TEST_CASE("binom_int agrees with the Pascal-grid oracle mod p") {
  for (i64 p : {2, 3, 5, 7}) {
    lrsoracle::PascalGrid grid(p, -20, 20, 12);
    for (i64 n = -20; n <= 20; ++n)
      for (i64 j = 0; j <= 12; ++j) {
        i64 expect = grid.at(n, j);
        REQUIRE(((binom_int(n, j) % p) + p) % p == expect);
        REQUIRE(binom_mod(n, j, p) == expect);
      }
  }
}

TEST_CASE("binom_mod implements Lucas for nonnegative n") {
  for (i64 p : {2, 3, 5}) {
    for (i64 n = 0; n <= 60; ++n)
      for (i64 j = 0; j <= 12; ++j) {
        // digit-by-digit product in base p
        i64 nn = n, jj = j, prod = 1;
        while (jj > 0 || nn > 0) {
          prod = prod * binom_mod(nn % p, jj % p, p) % p;
          nn /= p;
          jj /= p;
        }
        REQUIRE(binom_mod(n, j, p) == prod);
      }
  }
}

TEST_CASE("S(n, j) identity: zero below the diagonal band, shifted binomial above") {
  for (i64 p : {2, 3, 5}) {
    for (i64 m = 1; m <= 5; ++m)
      for (i64 n = m; n <= m + 6; ++n)
        for (i64 j = 0; j <= m + 3; ++j) {
          // direct alternating sum, all terms from exact integer binomials
          i64 direct = 0;
          for (i64 i = 0; i <= m; ++i) {
            i64 sign = (i % 2 == 0) ? 1 : -1;
            direct += sign * binom_int(m, i) * binom_int(n - i, j);
          }
          direct = ((direct % p) + p) % p;
          REQUIRE(s_of_nj_identity(m, n, j, p) == direct);
        }
  }
}

TEST_CASE("binomial sequence n -> C(n, j) mod p has minimal period p^r with p^{r-1} <= j < p^r") {
  for (i64 p : {2, 3, 5}) {
    for (i64 j = 1; j <= 10; ++j) {
      i64 per = binom_seq_period(j, p);
      // expected exponent r
      i64 pr = p;
      while (pr <= j) pr *= p;
      REQUIRE(per == pr);
      // period property and minimality against the Pascal oracle
      lrsoracle::PascalGrid grid(p, 0, 3 * pr, j);
      for (i64 n = 0; n <= 2 * pr; ++n) REQUIRE(grid.at(n, j) == grid.at(n + pr, j));
      for (i64 d = 1; d < pr; ++d) {
        if (pr % d != 0) continue;
        bool all_match = true;
        for (i64 n = 0; n <= 2 * pr && all_match; ++n)
          all_match = (grid.at(n, j) == grid.at(n + d, j));
        REQUIRE_FALSE(all_match);
      }
    }
  }
}

TEST_CASE("binom argument validation") {
  REQUIRE_THROWS_AS(binom_mod(3, 2, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(binom_seq_period(0, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(binom_seq_period(2, 6), std::invalid_argument);
}
