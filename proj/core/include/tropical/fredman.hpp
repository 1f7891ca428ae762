#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical::fredman {

// Ap[i][k] = A[i][k]*scale + (k+1), Bp[k][j] = B[k][j]*scale, with infinity already
// replaced by the surrogate. Stored as plain integers, row-major.
struct PerturbedPair {
  std::size_t rows = 0, inner = 0, cols = 0;
  std::uint64_t scale = 0;
  std::uint64_t surrogate = 0;  // value substituted for infinity (0 when none occurred)
  std::vector<std::int64_t> a;  // rows x inner
  std::vector<std::int64_t> b;  // inner x cols

  std::int64_t ap(std::size_t i, std::size_t k) const { return a[i * inner + k]; }
  std::int64_t bp(std::size_t k, std::size_t j) const { return b[k * cols + j]; }
};

// Slot (k, k') lives at column/row k*d + k' of the difference matrices.
struct DifferenceMatrices {
  std::size_t rows = 0, d = 0, cols = 0;
  std::vector<std::int64_t> a;  // rows x d^2
  std::vector<std::int64_t> b;  // d^2 x cols

  std::size_t slots() const { return d * d; }
  std::int64_t apr(std::size_t i, std::size_t s) const { return a[i * slots() + s]; }
  std::int64_t bpr(std::size_t s, std::size_t j) const { return b[s * cols + j]; }
};

struct RankedPairMatrices {
  std::size_t rows = 0, d = 0, cols = 0;
  std::vector<std::uint32_t> a;  // rows x d^2, ranks in 1..rows+cols
  std::vector<std::uint32_t> b;  // d^2 x cols

  std::size_t slots() const { return d * d; }
  std::size_t max_rank() const { return rows + cols; }
  std::uint32_t app(std::size_t i, std::size_t s) const { return a[i * slots() + s]; }
  std::uint32_t bpp(std::size_t s, std::size_t j) const { return b[s * cols + j]; }
};

inline std::size_t slot_index(std::size_t d, std::size_t k, std::size_t kp) { return k * d + kp; }

// Surrogate for infinity: 2 * (largest finite entry of A and B) + 1.
std::uint64_t infinity_surrogate(const WeightMatrix& a, const WeightMatrix& b);

PerturbedPair perturb(const WeightMatrix& a, const WeightMatrix& b);
DifferenceMatrices difference_matrices(const PerturbedPair& p);
RankedPairMatrices rank_replace(const DifferenceMatrices& diff);

inline RankedPairMatrices rank_pair(const WeightMatrix& a, const WeightMatrix& b) {
  return rank_replace(difference_matrices(perturb(a, b)));
}

}  // namespace tropical::fredman
