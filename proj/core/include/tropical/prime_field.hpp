#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace tropical {

bool is_prime(std::uint64_t n);

// Arithmetic modulo a prime p < 2^31; p = 2^31 - 1 uses shift-and-add reduction.
class PrimeField {
 public:
  static constexpr std::uint32_t kMersenne31 = 2147483647u;

  explicit PrimeField(std::uint32_t p = kMersenne31);

  std::uint32_t modulus() const { return p_; }
  bool is_mersenne31() const { return mersenne_; }

  std::uint32_t reduce(std::uint64_t x) const {
    if (mersenne_) {
      x = (x & kMersenne31) + (x >> 31);
      x = (x & kMersenne31) + (x >> 31);
      return static_cast<std::uint32_t>(x >= kMersenne31 ? x - kMersenne31 : x);
    }
    return static_cast<std::uint32_t>(x % p_);
  }
  // Cheap partial reduction of a product to below 2^32 (exact modulo p).
  std::uint64_t fold(std::uint64_t x) const {
    return mersenne_ ? (x & kMersenne31) + (x >> 31) : x % p_;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + (p_ - b); }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws std::domain_error on 0
  std::uint32_t from_int(std::int64_t v) const;
  std::uint32_t random(std::mt19937_64& rng) const { return static_cast<std::uint32_t>(rng() % p_); }

  std::uint32_t primitive_root() const;
  // Element of exact multiplicative order `order`; throws if order does not divide p - 1.
  std::uint32_t root_of_unity(std::uint64_t order) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  bool mersenne_;
};

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FieldMatrix random(const PrimeField& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }
  const std::vector<std::uint32_t>& data() const { return data_; }
  std::vector<std::uint32_t>& data() { return data_; }
  bool is_zero() const;

  FieldMatrix transposed() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

// Schoolbook product; adds rows*inner*cols to *mults when given.
FieldMatrix multiply(const PrimeField& f, const FieldMatrix& a, const FieldMatrix& b,
                     std::uint64_t* mults = nullptr);

}  // namespace tropical
