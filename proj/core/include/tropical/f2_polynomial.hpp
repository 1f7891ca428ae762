#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace tropical {

// Product of row variables times product of column variables; index lists are sorted
// and duplicate-free, so x*x = x is enforced by construction.
struct Monomial {
  std::vector<std::uint32_t> row;
  std::vector<std::uint32_t> col;

  bool is_constant() const { return row.empty() && col.empty(); }
  std::size_t degree() const { return row.size() + col.size(); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial multiply(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Multilinear polynomial over F2 with a canonical sorted term list and a separate
// constant bit. The term list never contains the empty monomial.
class SparseF2Polynomial {
 public:
  SparseF2Polynomial() = default;

  static SparseF2Polynomial constant(bool c);
  static SparseF2Polynomial row_variable(std::uint32_t v);
  static SparseF2Polynomial col_variable(std::uint32_t v);
  static SparseF2Polynomial from_terms(std::vector<Monomial> terms, bool constant);

  bool constant_term() const { return constant_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return !constant_ && terms_.empty(); }

  // 1 + largest referenced index, 0 when none.
  std::size_t row_variable_count() const;
  std::size_t col_variable_count() const;

  SparseF2Polynomial& operator^=(const SparseF2Polynomial& o);
  friend SparseF2Polynomial operator^(SparseF2Polynomial a, const SparseF2Polynomial& b) {
    return a ^= b;
  }
  friend SparseF2Polynomial operator*(const SparseF2Polynomial& a, const SparseF2Polynomial& b);

  SparseF2Polynomial shifted(std::uint32_t row_offset, std::uint32_t col_offset) const;

  // Throws std::out_of_range if a referenced variable is missing.
  bool evaluate(std::span<const std::uint8_t> row_values,
                std::span<const std::uint8_t> col_values) const;

  void write(std::ostream& out, const std::vector<std::string>& header = {}) const;
  static SparseF2Polynomial read(std::istream& in);

  friend bool operator==(const SparseF2Polynomial&, const SparseF2Polynomial&) = default;

 private:
  std::vector<Monomial> terms_;
  bool constant_ = false;
};

// Builds a polynomial by toggling monomials; repeated monomials cancel.
class MonomialAccumulator {
 public:
  void toggle(Monomial m);
  void toggle_constant() { constant_ = !constant_; }
  std::size_t size() const { return set_.size(); }
  SparseF2Polynomial finish();

 private:
  std::unordered_set<Monomial, MonomialHash> set_;
  bool constant_ = false;
};

}  // namespace tropical
