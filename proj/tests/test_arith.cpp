#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "gridcycles/arith.hpp"

using namespace gridcycles;

TEST_CASE("moebius on small and structured arguments") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(3) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(5) == -1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);   // three primes
  CHECK(moebius(49) == 0);    // square factor
  CHECK(moebius(210) == 1);   // four primes
  CHECK_THROWS_AS(moebius(0), std::invalid_argument);
  CHECK_THROWS_AS(moebius(-3), std::invalid_argument);
}

TEST_CASE("moebius satisfies the divisor-sum identity") {
  // sum_{d|m} mu(d) = [m == 1]
  for (long m = 1; m <= 200; ++m) {
    int total = 0;
    for (long d : divisors(m)) total += moebius(d);
    CHECK(total == (m == 1 ? 1 : 0));
  }
}

TEST_CASE("divisors are ascending and complete") {
  CHECK(divisors(1) == std::vector<long>{1});
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(97) == std::vector<long>{1, 97});
  const auto d60 = divisors(60);
  CHECK(d60.size() == 12);
  CHECK(d60.front() == 1);
  CHECK(d60.back() == 60);
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
}

TEST_CASE("binomial values and edge behavior") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(52, 26) == ExactInt("495918532948104"));
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(7, 8) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
  for (long n = 1; n <= 25; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("pow_int stays exact well past 64 bits") {
  CHECK(pow_int(3, 0) == 1);
  CHECK(pow_int(2, 10) == 1024);
  CHECK(pow_int(10, 20) == ExactInt("100000000000000000000"));
  CHECK(pow_int(3, 40) == ExactInt("12157665459056928801"));
}

TEST_CASE("exact_div divides exactly or refuses loudly") {
  CHECK(exact_div(ExactInt(12), ExactInt(4), "test") == 3);
  CHECK(exact_div(ExactInt(0), ExactInt(5), "test") == 0);
  CHECK(exact_div(ExactInt(-12), ExactInt(4), "test") == -3);
  CHECK_THROWS_AS(exact_div(ExactInt(7), ExactInt(2), "seven-halves"),
                  std::logic_error);
  try {
    exact_div(ExactInt(7), ExactInt(2), "seven-halves");
    FAIL("expected logic_error");
  } catch (const std::logic_error& err) {
    CHECK(std::string(err.what()).find("seven-halves") != std::string::npos);
  }
}
