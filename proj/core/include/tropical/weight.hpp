#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace tropical {

inline constexpr std::uint64_t kMaxInputWeight = std::uint64_t{1} << 60;
inline constexpr std::uint64_t kOverflowLimit = std::uint64_t{1} << 62;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Non-negative integer weight or the infinity sentinel. Ordering puts infinity last.
class Weight {
 public:
  constexpr Weight() = default;
  constexpr explicit Weight(std::uint64_t v) : raw_(v) {
    if (v > kOverflowLimit) throw OverflowError("weight exceeds 2^62");
  }

  static constexpr Weight infinity() {
    Weight w;
    w.raw_ = kInfRaw;
    return w;
  }

  constexpr bool is_inf() const { return raw_ == kInfRaw; }
  constexpr bool is_finite() const { return raw_ != kInfRaw; }
  constexpr std::uint64_t value() const { return raw_; }

  friend constexpr Weight operator+(Weight a, Weight b) {
    if (a.is_inf() || b.is_inf()) return infinity();
    std::uint64_t s = a.raw_ + b.raw_;
    if (s > kOverflowLimit) throw OverflowError("finite weight sum exceeds 2^62");
    return Weight(s);
  }
  Weight& operator+=(Weight o) { return *this = *this + o; }

  friend constexpr auto operator<=>(Weight, Weight) = default;
  friend constexpr bool operator==(Weight, Weight) = default;

 private:
  static constexpr std::uint64_t kInfRaw = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t raw_ = 0;
};

inline constexpr Weight min(Weight a, Weight b) { return b < a ? b : a; }

}  // namespace tropical
