#ifndef BURN_INT_MATH_HPP
#define BURN_INT_MATH_HPP

#include <cstdint>

namespace burn {

// floor(sqrt(n)), exact for the whole uint64 range.
constexpr std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  // Newton from an overestimate; the sequence decreases monotonically to the
  // floor root.
  std::uint64_t x = n;
  std::uint64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

constexpr std::uint64_t ceil_sqrt(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n ? r : r + 1;
}

// ceil(sqrt(n) + h/2) for n >= 1, h >= 0, without touching floating point.
//   h even: ceil(sqrt(n)) + h/2.
//   h odd:  ceil(sqrt(n) + 1/2) + (h-1)/2, and ceil(sqrt(n) + 1/2) is the least
//           m with (2m-1)^2 >= 4n, i.e. the least m with 2m-1 >= ceil(sqrt(4n)).
constexpr std::uint64_t ceil_sqrt_plus_half(std::uint64_t n, std::uint64_t h) {
  if (h % 2 == 0) return ceil_sqrt(n) + h / 2;
  const std::uint64_t s = ceil_sqrt(4 * n);
  return (s + 2) / 2 + (h - 1) / 2;
}

}  // namespace burn

#endif  // BURN_INT_MATH_HPP
