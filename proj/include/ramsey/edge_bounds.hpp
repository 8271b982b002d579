#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>

#include "ramsey/bounds.hpp"
#include "ramsey/int128.hpp"

namespace ramsey {

enum class Verdict { ExistsCompatible, Nonexistence };

// Sound bounds on the minimum (e_lower <= e(m,n;p)) and maximum
// (E(m,n;p) <= E_upper) edge counts of an (m,n;p)-graph, or a proof that no
// such graph exists. e_lower/E_upper are meaningful only when the verdict is
// ExistsCompatible.
struct EdgeBounds {
  Verdict verdict = Verdict::Nonexistence;
  i128 e_lower = 0;
  i128 E_upper = 0;

  static EdgeBounds nonexistent() { return EdgeBounds{}; }
  static EdgeBounds range(i128 lo, i128 hi) {
    return EdgeBounds{Verdict::ExistsCompatible, lo, hi};
  }
  bool exists() const { return verdict == Verdict::ExistsCompatible; }
};

// A = (alpha - beta + 3(p-1))p,  B = 12 p^2 (p-1)(p - beta - 2).
// Every edge count e of an (m,n;p)-graph satisfies 12e^2 - 2Ae + B/12 <= 0,
// i.e. (12e - A)^2 <= A^2 - B, so e lies in [(A - s)/12, (A + s)/12] with
// s = sqrt(A^2 - B).
std::pair<i128, i128> quadratic_coefficients(std::int64_t p,
                                             const MethodParams& params);

// Edge bounds for m,n >= 3 from the degree interval and the quadratic above.
// A negative discriminant, or crossing bounds, yields Nonexistence.
EdgeBounds edge_bounds(int m, int n, std::int64_t p,
                       const MethodParams& params);

// Exact closed forms when min(m,n) <= 2: with m = 2 the graph is edgeless
// and needs p <= n-1; with n = 2 it is complete and needs p <= m-1.
EdgeBounds edge_bounds_degenerate(int m, int n, std::int64_t p);

// Memoizes edge bounds per (m,n,p) against one immutable table snapshot;
// must not outlive a table mutation.
class EdgeBoundCache {
 public:
  // Dispatches to the degenerate closed forms when min(m,n) <= 2, otherwise
  // derives params for (m,n) from the table. (m,n) is order-sensitive here:
  // e and E are not symmetric under swapping m and n.
  const EdgeBounds& get(const BoundsTable& table, int m, int n,
                        std::int64_t p);

  void clear() { memo_.clear(); }

 private:
  std::unordered_map<std::uint64_t, EdgeBounds> memo_;
};

}  // namespace ramsey
