#include "ramsey/triangle.hpp"

#include <algorithm>

namespace ramsey {

std::optional<std::pair<i128, std::int64_t>> hwplus_rhs(
    std::int64_t p, const MethodParams& params) {
  std::int64_t lo = p - 1 - params.delta;
  std::int64_t hi = params.gamma;
  if (lo > hi) return std::nullopt;

  i128 c1 = i128{params.alpha} - params.beta + 3 * (i128{p} - 1);
  i128 c0 = (i128{params.beta} - params.alpha) * (p - 1);
  auto value = [&](std::int64_t d) {
    return -3 * i128{d} * d + c1 * d + c0;
  };

  // Concave quadratic: the integer max sits at one of the two integers
  // around the real vertex c1/6, clamped into the interval.
  auto clamp = [&](i128 d) {
    return static_cast<std::int64_t>(
        std::max<i128>(lo, std::min<i128>(hi, d)));
  };
  std::int64_t d0 = clamp(floor_div(c1, 6));
  std::int64_t d1 = clamp(floor_div(c1, 6) + 1);
  i128 v0 = value(d0);
  i128 v1 = value(d1);
  if (v1 > v0) return std::make_pair(v1, d1);
  return std::make_pair(v0, d0);
}

FeasibilityOutcome hwplus_holds(int /*m*/, int /*n*/, std::int64_t p,
                                const MethodParams& params) {
  auto rhs = hwplus_rhs(p, params);
  if (!rhs) return FeasibilityOutcome{};
  i128 lhs = (i128{p} - 1) * (p - 2 - params.alpha);
  return FeasibilityOutcome{lhs <= rhs->first, rhs->second, rhs->first};
}

std::optional<i128> delta_term(int m, int n, std::int64_t p, std::int64_t d,
                               const BoundsTable& table,
                               EdgeBoundCache& cache) {
  const EdgeBounds& neigh = cache.get(table, m - 1, n, d);
  if (!neigh.exists()) return std::nullopt;
  const EdgeBounds& nonneigh = cache.get(table, m, n - 1, p - d - 1);
  if (!nonneigh.exists()) return std::nullopt;
  return neigh.E_upper - nonneigh.e_lower;
}

FeasibilityOutcome mymain_holds(int m, int n, std::int64_t p,
                                const BoundsTable& table,
                                EdgeBoundCache& cache) {
  MethodParams params = get_params(table, m, n);
  // Degrees also live in [0, p-1]; values outside only produce shifted
  // graphs of impossible order.
  std::int64_t lo = std::max<std::int64_t>(0, p - 1 - params.delta);
  std::int64_t hi = std::min<std::int64_t>(params.gamma, p - 1);
  if (lo > hi) return FeasibilityOutcome{};

  std::optional<std::pair<i128, std::int64_t>> best;
  for (std::int64_t d = lo; d <= hi; ++d) {
    auto dt = delta_term(m, n, p, d, table, cache);
    if (!dt) continue;  // no vertex of this degree can occur
    i128 rest = i128{p} - d - 1;
    i128 term = 2 * choose2(rest) + 2 * *dt + 3 * i128{d} * rest;
    if (!best || term > best->first) best = {term, d};
  }
  if (!best) return FeasibilityOutcome{};
  i128 lhs = (i128{p} - 1) * (p - 2);
  return FeasibilityOutcome{lhs <= best->first, best->second, best->first};
}

}  // namespace ramsey
