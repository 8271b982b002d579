#include <doctest.h>

#include <random>

#include "ramsey/int128.hpp"

using namespace ramsey;

TEST_CASE("isqrt on perfect squares and neighbours") {
  CHECK(isqrt_floor(3600) == 60);
  CHECK(isqrt_ceil(3600) == 60);
  CHECK(isqrt_floor(2) == 1);
  CHECK(isqrt_ceil(2) == 2);
  CHECK(isqrt_floor(0) == 0);
  CHECK(isqrt_ceil(0) == 0);
  CHECK(isqrt_floor(1) == 1);
}

TEST_CASE("isqrt bracketing property") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 20000; ++i) {
    // bias toward huge values and near-squares
    u128 x = (u128{rng()} << 64) | rng();
    x >>= rng() % 120;
    u128 r = isqrt_floor(x);
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
    u128 c = isqrt_ceil(x);
    CHECK(c == (r * r == x ? r : r + 1));

    u128 s = rng() >> (rng() % 40);
    CHECK(isqrt_floor(s * s) == s);
    CHECK(isqrt_ceil(s * s) == s);
    if (s > 0) {
      CHECK(isqrt_floor(s * s - 1) == s - 1);
      CHECK(isqrt_ceil(s * s + 1) == s + 1);
    }
  }
}

TEST_CASE("floor and ceil division") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-8, 2) == -4);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(8, 2) == 4);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 5000; ++i) {
    i128 a = static_cast<i128>(static_cast<std::int64_t>(rng()));
    i128 b = static_cast<i128>(rng() % 1000 + 1);
    i128 f = floor_div(a, b);
    i128 c = ceil_div(a, b);
    CHECK(f * b <= a);
    CHECK((f + 1) * b > a);
    CHECK(c * b >= a);
    CHECK((c - 1) * b < a);
  }
}

TEST_CASE("i128 to_string") {
  CHECK(to_string(0) == "0");
  CHECK(to_string(-1) == "-1");
  CHECK(to_string(i128{1} << 100) == "1267650600228229401496703205376");
  CHECK(to_string(-(i128{1} << 100)) == "-1267650600228229401496703205376");
}
