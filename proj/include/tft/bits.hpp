#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "tft/error.hpp"

namespace tft {

/// Reverses the low `width` bits of j. Requires j < 2^width.
inline std::uint64_t bit_reverse(std::uint64_t j, int width) {
  if (width < 0 || width > 63 || (j >> width) != 0) {
    throw RangeError("bit_reverse: " + std::to_string(j) + " does not fit in " +
                     std::to_string(width) + " bits");
  }
  std::uint64_t r = 0;
  for (int b = 0; b < width; ++b) {
    r = (r << 1) | (j & 1);
    j >>= 1;
  }
  return r;
}

/// The i-th binary digit of e.
constexpr unsigned bit(std::uint64_t e, int i) {
  return i < 64 ? static_cast<unsigned>((e >> i) & 1) : 0U;
}

/// True iff every bit set in `mask` is also set in e.
constexpr bool covers(std::uint64_t e, std::uint64_t mask) { return (e & mask) == mask; }

/// Smallest x > e with covers(x, mask).
constexpr std::uint64_t next_covering(std::uint64_t e, std::uint64_t mask) {
  const std::uint64_t c = e + 1;
  const std::uint64_t missing = mask & ~c;
  if (missing == 0) return c;
  const int b = std::bit_width(missing) - 1;
  return (((c >> b) | 1) << b) | mask;
}

}  // namespace tft
