#include <doctest.h>

#include <random>

#include "ramsey/classical.hpp"

using namespace ramsey;

TEST_CASE("sum rule examples") {
  CHECK(gg_upper(4, 6) == 9);          // both even: strict
  CHECK(gg_upper(6, 4) == 9);
  CHECK(gg_upper(1711, 1865) == 3576); // both odd
  CHECK(gg_upper(22161, 23327) == 45488);
  CHECK(gg_upper(6061, 6582) == 12643); // mixed parity
  CHECK(gg_upper(1, 1) == 2);
  CHECK(gg_upper(2, 2) == 3);
}

TEST_CASE("sum rule properties") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    std::int64_t a = static_cast<std::int64_t>(rng() % 1000000) + 1;
    std::int64_t b = static_cast<std::int64_t>(rng() % 1000000) + 1;
    std::int64_t u = gg_upper(a, b);
    CHECK(u == gg_upper(b, a));
    bool both_even = a % 2 == 0 && b % 2 == 0;
    CHECK(u == (both_even ? a + b - 1 : a + b));
  }
}
