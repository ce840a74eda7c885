#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqk/betti.hpp"

using namespace pqk;

TEST_CASE("Betti vector construction and duality") {
  BettiVector hp5(5, {1, 0, 1, 0, 1, 0});
  CHECK(hp5.at(0) == 1);
  CHECK(hp5.at(10) == 1);  // b20 = b0
  CHECK(hp5.at(7) == 0);   // b14 = b6
  CHECK(hp5.hard_lefschetz_ok());
  CHECK(hp5.euler() == 6);
  CHECK_THROWS_AS(BettiVector(5, {2, 0, 1, 0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BettiVector(5, {1, 0, 1}), std::invalid_argument);
  BettiVector not_hl(5, {1, 0, 3, 0, 1, 0});
  CHECK_FALSE(not_hl.hard_lefschetz_ok());  // b8 < b4
}

TEST_CASE("linear relation residuals") {
  CHECK(betti_relation(BettiVector(5, {1, 0, 1, 0, 1, 0})).is_zero());
  CHECK(betti_relation(BettiVector(5, {1, 0, 3382, 0, 3383, 2704})).is_zero());
  CHECK_FALSE(betti_relation(BettiVector(5, {1, 0, 2, 0, 2, 1})).is_zero());
  // Dimension-16 specialization: -1 + 3 b2 + 3 b4 - b6 = 2 b8 (model data
  // of the dimension-16 survivor).
  BettiVector g48(4, {1, 0, 3, 0, 4});
  CHECK(betti_relation(g48).is_zero());
}

TEST_CASE("pair classification and the printed list") {
  CHECK(classify_pair(1, 1) == PairClass::forced_b6_eq_b10);
  CHECK(classify_pair(3, 5) == PairClass::forced_b6_eq_b10);
  CHECK(classify_pair(5, 5) == PairClass::invalid);  // 2*5-5-1 = 4, not in 5Z
  CHECK(classify_pair(9, 2) == PairClass::positive_multiple);  // 2*9-2-1 = 15
  auto pairs = lemma_pairs(5);
  std::vector<std::pair<long long, long long>> expect = {{1, 1}, {2, 3}, {3, 5}, {4, 7}, {5, 9}};
  CHECK(pairs == expect);
  // Brute force over the window: for b4 <= 5 no (b4, b8) admits b10 > b6.
  for (long long b4 = 1; b4 <= 5; ++b4)
    for (long long b8 = b4; b8 <= 50; ++b8) {
      bool admits_strict = false;
      for (long long b6 = 0; b6 <= 50 && !admits_strict; ++b6)
        for (long long b10 = b6 + 1; b10 <= 120 && !admits_strict; ++b10)
          if (-4 + 8 * b4 + 5 * b6 - 4 * b8 == 5 * b10) admits_strict = true;
      CHECK(admits_strict == (classify_pair(b4, b8) == PairClass::positive_multiple));
    }
}

TEST_CASE("minimal Euler characteristic") {
  MinEulerResult big = min_euler(3382);
  CHECK(big.chi == 16236);
  CHECK(big.argmin.b == std::vector<long long>{1, 0, 3382, 0, 3383, 2704});
  // Stability under enlarging the window.
  MinEulerResult big2 = min_euler(3382, 100);
  CHECK(big2.chi == big.chi);
  CHECK(big2.argmin.b == big.argmin.b);

  MinEulerResult one = min_euler(1);
  CHECK(one.chi == 6);
  CHECK(one.argmin.b == std::vector<long long>{1, 0, 1, 0, 1, 0});

  MinEulerResult two = min_euler(2);
  CHECK(betti_relation(two.argmin).is_zero());
  CHECK(two.argmin.hard_lefschetz_ok());
  CHECK(two.argmin.b[2] >= 2);
}
