#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace tropical {

// Smallest c with 2^c >= x; ceil_log2(0) = ceil_log2(1) = 0.
constexpr std::size_t ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1));
}

constexpr bool parity(std::uint64_t x) { return (std::popcount(x) & 1) != 0; }

}  // namespace tropical
