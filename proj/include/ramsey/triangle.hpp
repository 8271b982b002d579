#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ramsey/bounds.hpp"
#include "ramsey/edge_bounds.hpp"
#include "ramsey/int128.hpp"

namespace ramsey {

// Result of one feasibility test at (m,n,p). holds = false certifies
// R(m,n) <= p, given that the parameters are valid upper-bound shifts.
struct FeasibilityOutcome {
  bool holds = false;
  std::optional<std::int64_t> witness_d;  // maximizing degree when holds
  i128 rhs_value = 0;  // the computed max; meaningful iff witness_d is set
};

// Exact maximum of -3d^2 + (alpha - beta + 3(p-1))d + (beta - alpha)(p-1)
// over integer d in [p-1-delta, gamma]; nullopt when the interval is empty.
// Ties at the clamped vertex break toward the smaller d.
std::optional<std::pair<i128, std::int64_t>> hwplus_rhs(
    std::int64_t p, const MethodParams& params);

// Degree-quadratic test: holds iff the degree interval is nonempty and
// (p-1)(p-2-alpha) <= max of the quadratic above.
FeasibilityOutcome hwplus_holds(int m, int n, std::int64_t p,
                                const MethodParams& params);

// Delta(m,n,p,d) = E(m-1,n;d) - e(m,n-1;p-d-1), from edge bounds at the
// shifted points. nullopt when either shifted graph cannot exist, which
// rules d out as a degree.
std::optional<i128> delta_term(int m, int n, std::int64_t p, std::int64_t d,
                               const BoundsTable& table, EdgeBoundCache& cache);

// Triangle-count test: holds iff some feasible d in the degree interval has
// (p-1)(p-2) <= 2*C(p-d-1,2) + 2*Delta + 3d(p-d-1).
FeasibilityOutcome mymain_holds(int m, int n, std::int64_t p,
                                const BoundsTable& table,
                                EdgeBoundCache& cache);

// C(x,2) with the convention C(x,2) = 0 for x < 2.
constexpr i128 choose2(i128 x) { return x < 2 ? 0 : x * (x - 1) / 2; }

}  // namespace ramsey
