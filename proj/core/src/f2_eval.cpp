#include "tropical/f2_eval.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tropical {

namespace {

void multiply_rows(const BitMatrix& x, const BitMatrix& y, BitMatrix& z, std::size_t r0, std::size_t r1) {
  const std::size_t words = y.words_per_row();
  for (std::size_t i = r0; i < r1; ++i) {
    auto zi = z.row_words(i);
    for (std::size_t k = 0; k < x.cols(); ++k) {
      std::uint64_t mask = std::uint64_t{0} - static_cast<std::uint64_t>(x.get(i, k));
      auto yk = y.row_words(k);
      for (std::size_t w = 0; w < words; ++w) zi[w] ^= yk[w] & mask;
    }
  }
}

// Column of the transposed table: AND of the selected variable rows.
void and_rows(const BitMatrix& table_t, const std::vector<std::uint32_t>& vars,
              std::span<std::uint64_t> out, std::uint64_t tail) {
  std::fill(out.begin(), out.end(), ~std::uint64_t{0});
  for (auto v : vars) {
    if (v >= table_t.rows()) throw std::out_of_range("polynomial variable index out of range");
    auto src = table_t.row_words(v);
    for (std::size_t w = 0; w < out.size(); ++w) out[w] &= src[w];
  }
  if (!out.empty()) out.back() &= tail;
}

}  // namespace

BitMatrix f2_multiply(const BitMatrix& x, const BitMatrix& y, std::uint64_t* word_ops, unsigned threads) {
  if (x.cols() != y.rows()) throw std::invalid_argument("f2_multiply: inner dimension mismatch");
  BitMatrix z(x.rows(), y.cols());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, x.rows()))));
  if (threads == 1) {
    multiply_rows(x, y, z, 0, x.rows());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (x.rows() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t r0 = std::min(x.rows(), t * chunk), r1 = std::min(x.rows(), r0 + chunk);
      pool.emplace_back([&, r0, r1] { multiply_rows(x, y, z, r0, r1); });
    }
    for (auto& th : pool) th.join();
  }
  if (word_ops) *word_ops += static_cast<std::uint64_t>(x.rows()) * x.cols() * y.words_per_row();
  return z;
}

EvaluationMatrices build_evaluation_matrices(const SparseF2Polynomial& p, const BitMatrix& row_vars,
                                             const BitMatrix& col_vars) {
  if (p.row_variable_count() > row_vars.cols() || p.col_variable_count() > col_vars.cols())
    throw std::out_of_range("polynomial references a variable beyond the supplied tables");
  const std::size_t m = p.size();
  const BitMatrix row_t = row_vars.transposed();
  const BitMatrix col_t = col_vars.transposed();
  BitMatrix m1_t(m, row_vars.rows());
  EvaluationMatrices out{BitMatrix(), BitMatrix(m, col_vars.rows())};
  for (std::size_t q = 0; q < m; ++q) {
    const auto& mono = p.terms()[q];
    and_rows(row_t, mono.row, m1_t.row_words(q), m1_t.tail_mask());
    and_rows(col_t, mono.col, out.m2.row_words(q), out.m2.tail_mask());
  }
  out.m1 = m == 0 ? BitMatrix(row_vars.rows(), 0) : m1_t.transposed();
  return out;
}

BitMatrix evaluate_all_pairs(const SparseF2Polynomial& p, const BitMatrix& row_vars,
                             const BitMatrix& col_vars, std::uint64_t* word_ops, unsigned threads) {
  auto mats = build_evaluation_matrices(p, row_vars, col_vars);
  BitMatrix z = f2_multiply(mats.m1, mats.m2, word_ops, threads);
  if (p.constant_term()) {
    for (std::size_t i = 0; i < z.rows(); ++i)
      for (auto& w : z.row_words(i)) w = ~w;
    z.clear_padding();
  }
  return z;
}

}  // namespace tropical
