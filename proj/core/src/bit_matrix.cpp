#include "tropical/bit_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace tropical {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (auto& w : m.data_) w = rng();
  m.clear_padding();
  return m;
}

BitMatrix BitMatrix::from_bytes(std::size_t rows, std::size_t cols,
                                std::span<const std::uint8_t> bits) {
  if (bits.size() != rows * cols) throw std::invalid_argument("bit count does not match shape");
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bits[r * cols + c]) m.set(r, c, true);
  return m;
}

bool BitMatrix::padding_clear() const {
  if (words_ == 0) return true;
  std::uint64_t mask = tail_mask();
  for (std::size_t r = 0; r < rows_; ++r)
    if (data_[r * words_ + words_ - 1] & ~mask) return false;
  return true;
}

void BitMatrix::clear_padding() {
  if (words_ == 0) return;
  std::uint64_t mask = tail_mask();
  for (std::size_t r = 0; r < rows_; ++r) data_[r * words_ + words_ - 1] &= mask;
}

std::vector<std::uint8_t> BitMatrix::to_bytes() const {
  std::vector<std::uint8_t> out(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r * cols_ + c] = get(r, c);
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t x = data_[r * words_ + w];
      while (x) {
        std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(x));
        t.set(c, r, true);
        x &= x - 1;
      }
    }
  }
  return t;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("BitMatrix xor: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= o.data_[i];
  return *this;
}

std::size_t BitMatrix::popcount() const {
  std::size_t c = 0;
  for (auto w : data_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace tropical
