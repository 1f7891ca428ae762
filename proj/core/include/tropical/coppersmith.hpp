#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropical/prime_field.hpp"

namespace tropical::coppersmith {

struct OpCounter {
  std::uint64_t base_products = 0;  // leaf products of the structured recursion
  std::uint64_t field_mults = 0;    // every scalar field multiplication

  OpCounter& operator+=(const OpCounter& o) {
    base_products += o.base_products;
    field_mults += o.field_mults;
    return *this;
  }
};

// One linear-form term: sign * x^xdeg * (variable `slot`).
struct Term {
  std::uint8_t slot;
  std::int8_t sign;
  std::uint8_t xdeg;
};

enum class Role { a, b, c };

// Per-product linear forms of the five-product partial 2x3x2 identity.
struct RoleTable {
  std::size_t slots = 0;
  std::array<std::vector<Term>, 5> terms;
  std::size_t max_xdeg = 0;
};
const RoleTable& role_table(Role r);

inline constexpr std::size_t kProducts = 5;
inline constexpr std::size_t kExtractionPerLevel = 2;

// Slot names in the order used by role_table.
const std::vector<std::string>& slot_names(Role r);

struct IdentityCheck {
  bool ok = false;
  std::string detail;
  // Expanded trilinear coefficients per x-degree: "a11 b11 c11" -> coefficient.
  std::vector<std::map<std::string, long long>> by_degree;
};
IdentityCheck base_identity_check();

// A side: 2^M x 3^M with 5^M admissible positions; B side: 3^M x 2^M with 4^M.
enum class Side { a, b };

class StructuredFieldMatrix {
 public:
  StructuredFieldMatrix() = default;
  StructuredFieldMatrix(Side side, std::size_t level);

  static StructuredFieldMatrix from_dense(Side side, std::size_t level, const FieldMatrix& dense);
  static std::size_t admissible_count(Side side, std::size_t level);

  Side side() const { return side_; }
  std::size_t level() const { return level_; }
  std::size_t rows() const;
  std::size_t cols() const;

  // Values in slot multi-index order (top level is the most significant digit).
  std::vector<std::uint32_t>& values() { return values_; }
  const std::vector<std::uint32_t>& values() const { return values_; }

  std::optional<std::size_t> slot_of(std::size_t r, std::size_t c) const;
  std::pair<std::size_t, std::size_t> position_of(std::size_t slot) const;
  std::uint32_t at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::uint32_t v);  // throws on pattern violation
  FieldMatrix to_dense() const;

 private:
  Side side_ = Side::a;
  std::size_t level_ = 0;
  std::vector<std::uint32_t> values_;
};

// Coefficient capacity of the truncated x-polynomials and the extracted degree.
inline std::size_t truncation_bound(std::size_t M) { return 3 * M + 1; }
inline std::size_t extraction_degree(std::size_t M) { return kExtractionPerLevel * M; }

// Exact A * B through the 5^M-leaf recursion over truncated polynomials in x.
FieldMatrix structured_multiply(const PrimeField& f, const StructuredFieldMatrix& a,
                                const StructuredFieldMatrix& b, OpCounter* counter = nullptr);

// Entries (B * C)[k][i] at the admissible A positions (i, k), with C given 2^M x 2^M.
StructuredFieldMatrix structured_multiply_to_a(const PrimeField& f, const StructuredFieldMatrix& b,
                                               const FieldMatrix& c, OpCounter* counter = nullptr);

// Dimensions of the Vandermonde-decomposed problem for M divisible by 5.
struct Shape {
  std::size_t M = 0;
  std::size_t wide = 0;    // 2^{4M/5}
  std::size_t narrow = 0;  // 2^{M/5}
  std::size_t mapped = 0;  // C(M, 4M/5) * 2^{4M/5}
  std::size_t full = 0;    // 2^M
};
Shape shape_for(std::size_t M);

// Trit vectors (as 3^M column/row indices) with exactly M/5 zero digits, ascending.
std::vector<std::size_t> mapped_indices(std::size_t M);

class VandermondeSpec {
 public:
  static VandermondeSpec a_side(std::size_t M);  // 2^{4M/5} x 2^M, entry alpha_p^r
  static VandermondeSpec b_side(std::size_t M);  // 2^M x 2^{M/5}, entry beta_j^i

  Side side() const { return side_; }
  std::size_t level() const { return level_; }
  const std::vector<std::uint32_t>& nodes() const { return nodes_; }
  std::size_t powers() const { return powers_; }
  FieldMatrix matrix(const PrimeField& f) const;

 private:
  Side side_ = Side::a;
  std::size_t level_ = 0;
  std::size_t powers_ = 0;
  std::vector<std::uint32_t> nodes_;
};

// Coefficient vectors of the Lagrange basis on the given nodes: row p holds L_p.
FieldMatrix lagrange_basis(const PrimeField& f, const std::vector<std::uint32_t>& nodes,
                           OpCounter* counter = nullptr);

StructuredFieldMatrix decompose(const PrimeField& f, const FieldMatrix& in, Side side,
                                const VandermondeSpec& v, OpCounter* counter = nullptr);

FieldMatrix algorithm1(const PrimeField& f, const FieldMatrix& ain, const FieldMatrix& bin,
                       OpCounter* counter = nullptr);
FieldMatrix algorithm2(const PrimeField& f, const FieldMatrix& bin, const FieldMatrix& cin,
                       OpCounter* counter = nullptr);
FieldMatrix algorithm3(const PrimeField& f, const FieldMatrix& ct, const FieldMatrix& bt,
                       OpCounter* counter = nullptr);
FieldMatrix tensored_rect_multiply(const PrimeField& f, const FieldMatrix& p, const FieldMatrix& q,
                                   OpCounter* counter = nullptr);

// Infers M from the number of rows of a 2^{4M/5}-row operand; throws when no M fits.
std::size_t level_from_wide(std::size_t wide);

}  // namespace tropical::coppersmith
