#pragma once

#include <cstdint>

namespace ramsey {

// Sum rule R(m,n) <= R(m-1,n) + R(m,n-1), strict when both terms are even.
// The parity refinement stays valid with upper bounds in place of exact
// values: in a candidate graph of order u_left + u_right - 1, any vertex with
// degree >= u_left or co-degree >= u_right forces the conclusion, so every
// degree must equal u_left - 1. With both bounds even the order is odd and
// u_left - 1 is odd, giving an odd number of odd-degree vertices, which the
// handshake lemma forbids.
constexpr std::int64_t gg_upper(std::int64_t u_left, std::int64_t u_right) {
  std::int64_t sum = u_left + u_right;
  return (u_left % 2 == 0 && u_right % 2 == 0) ? sum - 1 : sum;
}

}  // namespace ramsey
