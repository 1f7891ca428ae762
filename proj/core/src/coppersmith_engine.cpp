#include <stdexcept>

#include "coppersmith_engine.hpp"

namespace tropical::coppersmith {

using detail::ipow;

namespace {

// Multi-index of the C variable c_{ji}: per level the digit is 2 * j_bit + i_bit.
std::size_t c_slot(std::size_t M, std::size_t i, std::size_t j) {
  std::size_t s = 0;
  for (std::size_t l = 0; l < M; ++l) {
    std::size_t sh = M - 1 - l;
    s = s * 4 + 2 * ((j >> sh) & 1) + ((i >> sh) & 1);
  }
  return s;
}

void check_field(const PrimeField& f, std::size_t M) {
  if (M >= 31 || (std::uint64_t{1} << M) + 1 >= f.modulus())
    throw std::invalid_argument("prime must exceed 2^M + 1");
}

}  // namespace

FieldMatrix structured_multiply(const PrimeField& f, const StructuredFieldMatrix& a,
                                const StructuredFieldMatrix& b, OpCounter* counter) {
  if (a.side() != Side::a || b.side() != Side::b || a.level() != b.level())
    throw std::invalid_argument("structured_multiply: expects A-side and B-side operands of equal level");
  const std::size_t M = a.level();
  check_field(f, M);
  const std::size_t cap = truncation_bound(M);
  const std::size_t ext = extraction_degree(M);
  if (ext >= cap) throw std::logic_error("extraction degree beyond truncation bound");

  const auto& ta = role_table(Role::a);
  const auto& tb = role_table(Role::b);
  const auto& tc = role_table(Role::c);
  detail::PolyOps ops(f, cap, ta.max_xdeg, tb.max_xdeg);
  detail::TrilinearRecursion<detail::PolyOps> rec(ops, ta, tb, tc, M);
  std::vector<std::uint32_t> out(ipow(4, M) * cap, 0);
  rec.run(a.values().data(), b.values().data(), out.data());

  const std::size_t n = std::size_t{1} << M;
  FieldMatrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = out[c_slot(M, i, j) * cap + ext];
  if (counter) {
    counter->base_products += rec.leaves();
    counter->field_mults += ops.mults;
  }
  return z;
}

StructuredFieldMatrix structured_multiply_to_a(const PrimeField& f, const StructuredFieldMatrix& b,
                                               const FieldMatrix& c, OpCounter* counter) {
  if (b.side() != Side::b) throw std::invalid_argument("structured_multiply_to_a: expects a B-side operand");
  const std::size_t M = b.level();
  const std::size_t n = std::size_t{1} << M;
  if (c.rows() != n || c.cols() != n) throw std::invalid_argument("structured_multiply_to_a: C must be 2^M x 2^M");
  check_field(f, M);
  const std::size_t cap = truncation_bound(M);
  const std::size_t ext = extraction_degree(M);

  std::vector<std::uint32_t> cv(ipow(4, M), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cv[c_slot(M, i, j)] = c(j, i);

  const auto& ta = role_table(Role::a);
  const auto& tb = role_table(Role::b);
  const auto& tc = role_table(Role::c);
  detail::PolyOps ops(f, cap, tb.max_xdeg, tc.max_xdeg);
  detail::TrilinearRecursion<detail::PolyOps> rec(ops, tb, tc, ta, M);
  std::vector<std::uint32_t> out(ipow(5, M) * cap, 0);
  rec.run(b.values().data(), cv.data(), out.data());

  StructuredFieldMatrix result(Side::a, M);
  for (std::size_t s = 0; s < result.values().size(); ++s) result.values()[s] = out[s * cap + ext];
  if (counter) {
    counter->base_products += rec.leaves();
    counter->field_mults += ops.mults;
  }
  return result;
}

}  // namespace tropical::coppersmith
