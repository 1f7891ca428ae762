#include "tropical/prime_field.hpp"

#include <stdexcept>

namespace tropical {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p), mersenne_(p == kMersenne31) {
  if (p > kMersenne31 || !is_prime(p)) throw std::invalid_argument("modulus must be a prime below 2^31");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from_int(std::int64_t v) const {
  auto m = static_cast<std::int64_t>(p_);
  v %= m;
  if (v < 0) v += m;
  return static_cast<std::uint32_t>(v);
}

std::uint32_t PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  auto factors = prime_factors(p_ - 1);
  for (std::uint32_t g = 2; g < p_; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow(g, (p_ - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

std::uint32_t PrimeField::root_of_unity(std::uint64_t order) const {
  if (order == 0 || (p_ - 1) % order != 0) throw std::invalid_argument("root of unity order must divide p - 1");
  return pow(primitive_root(), (p_ - 1) / order);
}

FieldMatrix FieldMatrix::random(const PrimeField& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  FieldMatrix m(rows, cols);
  for (auto& v : m.data_) v = f.random(rng);
  return m;
}

bool FieldMatrix::is_zero() const {
  for (auto v : data_)
    if (v) return false;
  return true;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FieldMatrix multiply(const PrimeField& f, const FieldMatrix& a, const FieldMatrix& b, std::uint64_t* mults) {
  if (a.cols() != b.rows()) throw std::invalid_argument("field multiply: inner dimension mismatch");
  FieldMatrix c(a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint64_t x = a(i, k);
      if (!x) continue;
      const std::uint32_t* bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += f.fold(x * bk[j]);
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.reduce(acc[j]);
  }
  if (mults) *mults += static_cast<std::uint64_t>(a.rows()) * a.cols() * b.cols();
  return c;
}

}  // namespace tropical
