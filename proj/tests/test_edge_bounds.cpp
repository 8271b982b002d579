#include <doctest.h>

#include <optional>

#include "ramsey/edge_bounds.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/triangle.hpp"

using namespace ramsey;

namespace {

// Exact small Ramsey values let us hand the theorems their sharpest valid
// parameters.
std::optional<std::int64_t> exact_r(int m, int n) {
  if (m > n) std::swap(m, n);
  if (auto b = base_value(m, n)) return b;
  if (m == 3) {
    switch (n) {
      case 3: return 6;
      case 4: return 9;
      case 5: return 14;
      case 6: return 18;
      case 7: return 23;
    }
  }
  if (m == 4 && n == 4) return 18;
  if (m == 4 && n == 5) return 25;
  return std::nullopt;
}

MethodParams exact_params(int m, int n) {
  return MethodParams{*exact_r(m - 2, n) - 1, *exact_r(m, n - 2) - 1,
                      *exact_r(m - 1, n) - 1, *exact_r(m, n - 1) - 1};
}

}  // namespace

TEST_CASE("quadratic coefficients for (3,3)") {
  MethodParams p33{0, 0, 2, 2};
  auto [a5, b5] = quadratic_coefficients(5, p33);
  CHECK(a5 == 60);
  CHECK(b5 == 3600);
  auto [a6, b6] = quadratic_coefficients(6, p33);
  CHECK(a6 == 90);
  CHECK(b6 == 8640);
  auto [a1, b1] = quadratic_coefficients(1, MethodParams{7, 3, 9, 9});
  CHECK(a1 == 4);  // alpha - beta at p = 1
  CHECK(b1 == 0);
}

TEST_CASE("edge bounds at the (3,3) boundary") {
  MethodParams p33{0, 0, 2, 2};
  auto five = edge_bounds(3, 3, 5, p33);
  REQUIRE(five.exists());
  CHECK(five.e_lower == 5);
  CHECK(five.E_upper == 5);

  auto six = edge_bounds(3, 3, 6, p33);
  CHECK(!six.exists());

  auto zero = edge_bounds(3, 3, 0, p33);
  REQUIRE(zero.exists());
  CHECK(zero.e_lower == 0);
  CHECK(zero.E_upper == 0);
}

TEST_CASE("degenerate closed forms") {
  auto a = edge_bounds_degenerate(2, 3, 2);
  REQUIRE(a.exists());
  CHECK(a.e_lower == 0);
  CHECK(a.E_upper == 0);

  auto b = edge_bounds_degenerate(3, 2, 2);
  REQUIRE(b.exists());
  CHECK(b.e_lower == 1);
  CHECK(b.E_upper == 1);

  CHECK(!edge_bounds_degenerate(2, 3, 3).exists());
  CHECK(!edge_bounds_degenerate(1, 9, 1).exists());
  CHECK(edge_bounds_degenerate(4, 2, 3).exists());
  CHECK(edge_bounds_degenerate(4, 2, 3).e_lower == 3);
  CHECK(!edge_bounds_degenerate(4, 2, 4).exists());
}

TEST_CASE("cache dispatch and order sensitivity") {
  BoundsTable table;  // base cases suffice for (3,3)
  EdgeBoundCache cache;
  auto& eb = cache.get(table, 3, 3, 5);
  CHECK(eb.e_lower == 5);
  CHECK(eb.E_upper == 5);
  auto& deg = cache.get(table, 2, 7, 4);
  CHECK(deg.exists());
  CHECK(deg.E_upper == 0);
  auto& deg2 = cache.get(table, 7, 2, 4);
  CHECK(deg2.exists());
  CHECK(deg2.e_lower == 6);
  CHECK(!cache.get(table, 3, 3, -1).exists());
}

TEST_CASE("edge bounds bracket the oracle exactly where graphs exist") {
  for (auto [m, n] : {std::pair{3, 3}, {3, 4}, {3, 5}, {4, 4}}) {
    MethodParams params = exact_params(m, n);
    for (int p = 0; p <= 7; ++p) {
      auto exact = oracle::exact_edge_numbers(m, n, p, 8, 0);
      EdgeBounds eb = edge_bounds(m, n, p, params);
      INFO("m=", m, " n=", n, " p=", p);
      if (exact) {
        REQUIRE(eb.exists());
        CHECK(eb.e_lower <= exact->first);
        CHECK(eb.E_upper >= exact->second);
      }
      // Nonexistence claims must never be wrong.
      if (!eb.exists()) CHECK(!exact);
    }
  }
}

TEST_CASE("complement duality of exact edge numbers") {
  for (auto [m, n] : {std::pair{3, 4}, {3, 5}, {4, 4}}) {
    for (int p = 0; p <= 7; ++p) {
      auto fwd = oracle::exact_edge_numbers(m, n, p, 8, 0);
      auto rev = oracle::exact_edge_numbers(n, m, p, 8, 0);
      REQUIRE(fwd.has_value() == rev.has_value());
      if (!fwd) continue;
      i128 total = choose2(p);
      CHECK(fwd->first + rev->second == total);
      CHECK(fwd->second + rev->first == total);
    }
  }
}
