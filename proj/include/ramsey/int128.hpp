#pragma once

#include <cstdint>
#include <string>

namespace ramsey {

using i128 = __int128;
using u128 = unsigned __int128;

// floor(sqrt(x)), exact over the full 128-bit range (digit-by-digit method).
constexpr u128 isqrt_floor(u128 x) {
  u128 res = 0;
  u128 bit = u128{1} << 126;
  while (bit > x) bit >>= 2;
  while (bit != 0) {
    if (x >= res + bit) {
      x -= res + bit;
      res = (res >> 1) + bit;
    } else {
      res >>= 1;
    }
    bit >>= 2;
  }
  return res;
}

constexpr u128 isqrt_ceil(u128 x) {
  u128 r = isqrt_floor(x);
  return r * r == x ? r : r + 1;
}

// Floor/ceil division with a positive divisor; C++ '/' truncates toward zero.
constexpr i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  i128 r = a % b;
  return r < 0 ? q - 1 : q;
}

constexpr i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

std::string to_string(i128 v);

}  // namespace ramsey
