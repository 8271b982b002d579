#include "ramsey/edge_bounds.hpp"

#include <algorithm>

namespace ramsey {

namespace {

// Exactness contract: intermediates are bounded by ~12p^4, so p up to 2^20
// keeps everything well inside 128 bits (12 * 2^80 < 2^84).
constexpr std::int64_t kMaxOrder = std::int64_t{1} << 20;

void check_width(std::int64_t p, const MethodParams& params) {
  if (p > kMaxOrder || params.alpha > kMaxOrder || params.beta > kMaxOrder ||
      params.gamma > kMaxOrder || params.delta > kMaxOrder) {
    throw ArithmeticOverflow("order or parameter beyond 2^20 exactness contract");
  }
}

}  // namespace

std::pair<i128, i128> quadratic_coefficients(std::int64_t p,
                                             const MethodParams& params) {
  check_width(p, params);
  i128 P = p;
  i128 A = (i128{params.alpha} - params.beta + 3 * (P - 1)) * P;
  i128 B = 12 * P * P * (P - 1) * (P - params.beta - 2);
  return {A, B};
}

EdgeBounds edge_bounds(int m, int n, std::int64_t p,
                       const MethodParams& params) {
  if (p < 0) return EdgeBounds::nonexistent();
  if (p == 0) return EdgeBounds::range(0, 0);
  auto [A, B] = quadratic_coefficients(p, params);
  i128 disc = A * A - B;
  // No real root: Goodman's identity rules the graph out entirely.
  if (disc < 0) return EdgeBounds::nonexistent();

  // The subtracted position takes the ceiling sqrt and the added position
  // the floor sqrt, so integer rounding can only widen the interval.
  i128 s_hi = static_cast<i128>(isqrt_ceil(static_cast<u128>(disc)));
  i128 s_lo = static_cast<i128>(isqrt_floor(static_cast<u128>(disc)));

  i128 P = p;
  i128 e_lower = std::max(ceil_div(P * (P - params.delta - 1), 2),
                          ceil_div(A - s_hi, 12));
  i128 E_upper =
      std::min(floor_div(P * params.gamma, 2), floor_div(A + s_lo, 12));

  i128 max_edges = P * (P - 1) / 2;
  e_lower = std::max<i128>(e_lower, 0);
  E_upper = std::min(E_upper, max_edges);
  if (e_lower > E_upper) return EdgeBounds::nonexistent();
  return EdgeBounds::range(e_lower, E_upper);
}

EdgeBounds edge_bounds_degenerate(int m, int n, std::int64_t p) {
  if (p < 0) return EdgeBounds::nonexistent();
  if (p == 0) return EdgeBounds::range(0, 0);
  if (m == 1 || n == 1) return EdgeBounds::nonexistent();
  if (m == 2) {
    // Edgeless, and an independent set of size n appears at p = n.
    return p <= n - 1 ? EdgeBounds::range(0, 0) : EdgeBounds::nonexistent();
  }
  if (n == 2) {
    if (p > m - 1) return EdgeBounds::nonexistent();
    i128 full = i128{p} * (p - 1) / 2;
    return EdgeBounds::range(full, full);
  }
  throw RamseyError("edge_bounds_degenerate requires min(m,n) <= 2");
}

const EdgeBounds& EdgeBoundCache::get(const BoundsTable& table, int m, int n,
                                      std::int64_t p) {
  if (p < 0) {
    static const EdgeBounds none = EdgeBounds::nonexistent();
    return none;
  }
  std::uint64_t key = (static_cast<std::uint64_t>(m) << 56) |
                      (static_cast<std::uint64_t>(n) << 48) |
                      static_cast<std::uint64_t>(p);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  EdgeBounds result = std::min(m, n) <= 2
                          ? edge_bounds_degenerate(m, n, p)
                          : edge_bounds(m, n, p, get_params(table, m, n));
  return memo_.emplace(key, result).first->second;
}

}  // namespace ramsey
