#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropical/bit_matrix.hpp"
#include "tropical/matrix.hpp"
#include "tropical/minplus.hpp"
#include "tropical/rs_poly.hpp"

namespace tropical::fast {

enum class EvaluationMode { expanded, direct };

struct FastProductConfig {
  std::size_t d = 2;
  std::size_t reps = 0;  // 0 selects 18 * ceil(log2 n)
  std::optional<std::size_t> e;
  std::optional<std::size_t> ep;
  std::uint64_t seed = 1;
  std::uint64_t call = 0;
  EvaluationMode mode = EvaluationMode::direct;
  bool verify = false;
  unsigned threads = 1;
  std::uint64_t monomial_cap = rs::kDefaultMonomialCap;
};

struct FastProductStats {
  std::uint64_t word_ops = 0;
  std::uint64_t entries = 0;
  std::uint64_t fallbacks = 0;        // entries recomputed by direct scan
  std::uint64_t invalid_index = 0;    // reconstructed index outside [1, d]
  std::uint64_t verify_mismatches = 0;
  std::uint64_t blocks = 0;

  FastProductStats& operator+=(const FastProductStats& o);
};

struct FastProductResult {
  WeightMatrix values;
  WitnessMatrix witness;
  FastProductStats stats;
};

std::size_t default_reps(std::size_t n);

// Parameters used for one rows x d by d x cols block.
rs::RsParameters block_parameters(const FastProductConfig& cfg, std::size_t rows, std::size_t cols);

class BitVoteTally {
 public:
  BitVoteTally() = default;
  BitVoteTally(std::size_t rows, std::size_t cols, std::size_t bits, std::size_t reps);

  void add(std::size_t ell, const BitMatrix& votes);
  void merge(const BitVoteTally& o);

  std::uint32_t count(std::size_t i, std::size_t j, std::size_t ell) const {
    return counts_[(ell * rows_ + i) * cols_ + j];
  }
  std::uint32_t& count(std::size_t i, std::size_t j, std::size_t ell) {
    return counts_[(ell * rows_ + i) * cols_ + j];
  }
  bool majority(std::size_t i, std::size_t j, std::size_t ell) const {
    return 2 * static_cast<std::size_t>(count(i, j, ell)) > reps_;
  }
  // Number of votes that must flip before the majority bit changes.
  std::size_t margin(std::size_t i, std::size_t j, std::size_t ell) const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t bits() const { return bits_; }
  std::size_t reps() const { return reps_; }

 private:
  std::size_t rows_ = 0, cols_ = 0, bits_ = 0, reps_ = 0;
  std::vector<std::uint32_t> counts_;
};

// Randomized rows x d by d x cols product; block selects the random stream.
FastProductResult rect_minplus_fast(const WeightMatrix& a, const WeightMatrix& b,
                                    const FastProductConfig& cfg, std::uint64_t block = 0);

// Pads the inner dimension with infinity to a multiple of d and merges block results.
FastProductResult minplus_product_fast(const WeightMatrix& a, const WeightMatrix& b,
                                       const FastProductConfig& cfg);

struct AccuracyReport {
  std::uint64_t samples = 0;
  std::uint64_t agree = 0;
  double rate() const { return samples ? static_cast<double>(agree) / static_cast<double>(samples) : 0.0; }
};

// Agreement of single-repetition output bits with the true index bits, over whole
// (rep, ell) bit matrices until at least `samples` cells are covered. Direct mode only.
AccuracyReport measure_per_entry_accuracy(const WeightMatrix& a, const WeightMatrix& b,
                                          const FastProductConfig& cfg, std::uint64_t samples);

// Smallest perturbed-argmin index per cell (0-based), including infinity surrogates.
std::vector<std::uint32_t> true_winners(const WeightMatrix& a, const WeightMatrix& b);

// Strategy for apsp_by_squaring; each round gets its own random stream.
ProductStrategy fast_strategy(const FastProductConfig& cfg, FastProductStats* stats = nullptr);

}  // namespace tropical::fast
