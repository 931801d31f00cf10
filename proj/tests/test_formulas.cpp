#include "doctest.h"

#include <stdexcept>

#include "cmotzkin/enumerate.hpp"
#include "cmotzkin/formulas.hpp"

using namespace cmotzkin;

TEST_CASE("catalan numbers match their convolution recurrence") {
  std::vector<BigInt> by_recurrence{1};
  for (int n = 0; n < 12; ++n) {
    BigInt next = 0;
    for (int i = 0; i <= n; ++i)
      next += by_recurrence[i] * by_recurrence[n - i];
    by_recurrence.push_back(next);
  }
  for (int n = 0; n <= 12; ++n) CHECK(catalan(n) == by_recurrence[n]);
  CHECK(catalan(3) == 5);
  CHECK(catalan(0) == 1);
}

TEST_CASE("binomials and factorials") {
  CHECK(central_binomial(5) == 10);
  CHECK(central_binomial(0) == 1);
  CHECK(binomial(40, 20) == BigInt("137846528820"));
  CHECK(binomial(5, 7) == 0);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
  CHECK_THROWS_AS(binomial(-2, 1), std::invalid_argument);
}

TEST_CASE("closed forms at small sizes") {
  CHECK(syt_count_formula(5, 5) == 26);
  CHECK(syt_count_formula(5, 2) == 10);
  for (int rows = 2; rows <= 5; ++rows) CHECK(syt_count_formula(0, rows) == 1);
  CHECK(syt_count_formula(4, 4) == 10);
  CHECK_THROWS_AS(syt_count_formula(3, 6), std::invalid_argument);
  CHECK_THROWS_AS(syt_count_formula(3, 1), std::invalid_argument);
}

TEST_CASE("closed forms agree with the walk DPs") {
  for (int rows = 2; rows <= 5; ++rows)
    for (int n = 0; n <= 25; ++n)
      CHECK(syt_count_formula(n, rows) == count_syt_dp(n, rows));
  // the three-row family lists Motzkin numbers
  for (int n = 0; n <= 20; ++n)
    CHECK(syt_count_formula(n, 3) ==
          count_motzkin_dp(n, 1, LevelPolicy::Anywhere));
}

TEST_CASE("exact rationals stay reduced") {
  const BigRat r(240, 144);
  CHECK(r == BigRat(5, 3));
  CHECK(boost::multiprecision::numerator(r) == 5);
  CHECK(boost::multiprecision::denominator(r) == 3);
}
