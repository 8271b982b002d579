#include "ramsey/int128.hpp"

namespace ramsey {

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  u128 x = negative ? u128(-(v + 1)) + 1 : u128(v);
  std::string digits;
  while (x != 0) {
    digits.push_back(char('0' + int(x % 10)));
    x /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace ramsey
