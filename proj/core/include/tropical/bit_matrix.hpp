#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace tropical {

// Dense 0/1 matrix, row-major, 64 entries per word; bits past cols are kept zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix random(std::size_t rows, std::size_t cols, std::mt19937_64& rng);
  static BitMatrix from_bytes(std::size_t rows, std::size_t cols, std::span<const std::uint8_t> bits);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t bit = std::uint64_t{1} << (c % 64);
    auto& w = data_[r * words_ + c / 64];
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::span<std::uint64_t> row_words(std::size_t r) { return {data_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {data_.data() + r * words_, words_};
  }
  const std::vector<std::uint64_t>& words() const { return data_; }

  // Mask of valid bits in the last word of a row.
  std::uint64_t tail_mask() const {
    return cols_ % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (cols_ % 64)) - 1;
  }
  bool padding_clear() const;
  void clear_padding();

  std::vector<std::uint8_t> to_bytes() const;
  BitMatrix transposed() const;
  BitMatrix& operator^=(const BitMatrix& o);
  std::size_t popcount() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace tropical
