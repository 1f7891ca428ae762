#pragma once

#include <cstdint>

#include "tropical/bit_matrix.hpp"
#include "tropical/f2_polynomial.hpp"

namespace tropical {

// Z = X * Y over F2 by masked row XOR; adds X.rows * X.cols * words(Y) to *word_ops.
BitMatrix f2_multiply(const BitMatrix& x, const BitMatrix& y, std::uint64_t* word_ops = nullptr,
                      unsigned threads = 1);

struct EvaluationMatrices {
  BitMatrix m1;  // rows x monomials
  BitMatrix m2;  // monomials x cols
};

// row_vars is rows x (row variable count), col_vars is cols x (column variable count).
EvaluationMatrices build_evaluation_matrices(const SparseF2Polynomial& p, const BitMatrix& row_vars,
                                             const BitMatrix& col_vars);

BitMatrix evaluate_all_pairs(const SparseF2Polynomial& p, const BitMatrix& row_vars,
                             const BitMatrix& col_vars, std::uint64_t* word_ops = nullptr,
                             unsigned threads = 1);

}  // namespace tropical
