#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "tropical/weight.hpp"

namespace tropical {

class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols, Weight fill = Weight::infinity())
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  static WeightMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Weight& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Weight operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Weight at(std::size_t r, std::size_t c) const;

  std::span<const Weight> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Weight>& entries() const { return entries_; }

  WeightMatrix transposed() const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Weight> entries_;
};

// Inner indices are stored 0-based; kNoWitness marks infinite output cells.
class WitnessMatrix {
 public:
  static constexpr std::uint32_t kNoWitness = std::numeric_limits<std::uint32_t>::max();

  WitnessMatrix() = default;
  WitnessMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, kNoWitness) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::optional<std::size_t> get(std::size_t r, std::size_t c) const {
    auto k = entries_[r * cols_ + c];
    if (k == kNoWitness) return std::nullopt;
    return k;
  }

  friend bool operator==(const WitnessMatrix&, const WitnessMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> entries_;
};

struct ProductResult {
  WeightMatrix values;
  WitnessMatrix witness;
};

}  // namespace tropical
