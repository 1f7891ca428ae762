#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropical/bit_matrix.hpp"
#include "tropical/f2_polynomial.hpp"
#include "tropical/fredman.hpp"

namespace tropical::rs {

struct RsParameters {
  std::size_t n = 0;   // rank values lie in 1..2n
  std::size_t d = 0;
  std::size_t t = 0;   // bits per rank value
  std::size_t e = 0;   // outer AND approximator width
  std::size_t ep = 0;  // inner (LEQ) approximator width
  std::uint64_t seed = 0;

  // t = ceil(log2 2n), e = 2 + ceil(log2 d), ep = 3 + 2 ceil(log2 d) + ceil(log2 t).
  static RsParameters defaults(std::size_t n, std::size_t d, std::uint64_t seed);

  std::size_t index_bits() const;  // bits of the 1-based candidate index k
  std::size_t factors_per_slot() const { return (t + 1) * ep; }
  std::size_t vars_per_entry() const { return d * d * factors_per_slot(); }
  void validate() const;
};

struct StreamId {
  std::uint64_t call = 0;
  std::uint64_t block = 0;
  std::uint64_t rep = 0;
  std::uint64_t ell = 0;
};

// One affine factor c + a'_S + b'_T of the approximated LEQ; masks select bits of
// (rank - 1) as an ordinary t-bit integer.
struct AffineFactor {
  std::uint64_t a_mask = 0;
  std::uint64_t b_mask = 0;
  bool constant = false;
};

struct RandomBits {
  std::size_t d = 0, e = 0, t = 0, ep = 0;
  StreamId stream;
  std::vector<std::uint8_t> outer;   // [k][r][k'], d*e*d selection bits
  std::vector<std::uint64_t> inner;  // [m][r], masks over the fan-in of AND_m
  std::vector<AffineFactor> factors; // [m][r], derived from inner

  std::span<const std::uint8_t> outer_rows(std::size_t k) const {
    return {outer.data() + k * e * d, e * d};
  }
  std::uint64_t inner_mask(std::size_t m, std::size_t r) const { return inner[m * ep + r]; }
  const AffineFactor& factor(std::size_t m, std::size_t r) const { return factors[m * ep + r]; }
};

// Fan-in of AND_m inside LEQ: t equality bits for m = 0, else m + 1 inputs.
std::size_t leq_and_fan_in(std::size_t t, std::size_t m);

RandomBits draw_random_bits(const RsParameters& params, const StreamId& id);

// E(y) = AND_r (1 + XOR_j r_{r,j} (y_j + 1)); rows is e x |y| row-major.
bool approximate_and(std::span<const std::uint8_t> y, std::span<const std::uint8_t> rows,
                     std::size_t e);

// Exact XOR-of-ANDs comparator on (a - 1) and (b - 1) in t bits; a, b in [1, 2^t].
bool leq_reference(std::uint64_t a, std::uint64_t b, std::size_t t);

// Un-expanded approximate comparator evaluated gate by gate from raw bits.
bool leq_prime_direct(const RandomBits& bits, std::uint64_t a, std::uint64_t b);

// Approximate comparator expanded over row variables m*ep + r and column variables
// m*ep + r (a single slot).
SparseF2Polynomial build_leq_prime(const RsParameters& params, const RandomBits& bits);

// Values of the (t+1)*ep row (or column) variables of a single rank entry.
std::vector<std::uint8_t> leq_prime_variables(const RandomBits& bits, std::uint64_t rank, bool row_side);

struct PreprocessedVariables {
  std::size_t per_entry = 0;  // d^2 * (t+1) * ep
  BitMatrix row;              // rows x per_entry
  BitMatrix col;              // cols x per_entry
};

// Variable index of factor (m, r) in slot s.
inline std::size_t variable_index(const RsParameters& p, std::size_t slot, std::size_t m, std::size_t r) {
  return (slot * (p.t + 1) + m) * p.ep + r;
}

PreprocessedVariables preprocess_xors(const RsParameters& params,
                                      const fredman::RankedPairMatrices& ranked,
                                      const RandomBits& bits);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double budget_log2, double bound_log2)
      : std::runtime_error(what), budget_log2_(budget_log2), bound_log2_(bound_log2) {}
  double budget_log2() const { return budget_log2_; }
  double bound_log2() const { return bound_log2_; }

 private:
  double budget_log2_;
  double bound_log2_;
};

inline constexpr std::uint64_t kDefaultMonomialCap = std::uint64_t{1} << 24;

// Closed-form budget with ceiling logs:
// (1 + log d)(log(d+1) + log(t+1) + log2(3)(3 + 2 log d + log t)).
double monomial_budget_log2(std::size_t d, std::size_t t);
std::uint64_t monomial_budget(const RsParameters& params);  // saturates at 2^64 - 1

// log2 of d * ((d+1)(t+1)3^ep)^e for the chosen e, ep.
double expansion_bound_log2(const RsParameters& params);

// Candidate set for output bit ell: 1-based k whose bit ell is set.
// Throws BudgetExceeded when the expansion bound for the chosen e, ep exceeds cap.
void check_expansion_budget(const RsParameters& params, std::uint64_t cap = kDefaultMonomialCap);

std::vector<std::size_t> candidates_for_bit(std::size_t d, std::size_t ell);

SparseF2Polynomial build_output_bit_polynomial(const RsParameters& params, const RandomBits& bits,
                                               std::size_t ell,
                                               std::uint64_t cap = kDefaultMonomialCap);

// Randomized output bit for one (i, j), evaluated gate by gate from the ranks.
bool output_bit_direct(const RsParameters& params, const RandomBits& bits,
                       const fredman::RankedPairMatrices& ranked, std::size_t i, std::size_t j,
                       std::size_t ell);

// Same expression for all pairs, 64 columns per machine word. Adds word operations to ops.
BitMatrix output_bits_sliced(const RsParameters& params, const RandomBits& bits,
                             const PreprocessedVariables& vars, const BitMatrix& col_vars_t,
                             std::size_t ell, std::uint64_t* ops = nullptr);

}  // namespace tropical::rs
