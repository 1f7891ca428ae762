#include "tropical/coppersmith.hpp"

#include <sstream>
#include <stdexcept>

namespace tropical::coppersmith {

namespace {

RoleTable make_table(std::size_t slots, std::array<std::vector<Term>, 5> terms) {
  RoleTable t;
  t.slots = slots;
  t.terms = std::move(terms);
  for (const auto& p : t.terms)
    for (const auto& term : p) t.max_xdeg = std::max<std::size_t>(t.max_xdeg, term.xdeg);
  return t;
}

// a: a11 a12 a13 a22 a23; b: b11 b12 b21 b31; c: c11 c12 c21 c22.
const RoleTable kA = make_table(5, {{{{0, 1, 0}, {1, 1, 2}},
                                     {{0, 1, 0}, {2, 1, 2}},
                                     {{0, 1, 0}, {3, 1, 2}},
                                     {{0, 1, 0}, {4, 1, 2}},
                                     {{0, -1, 0}}}});
const RoleTable kB = make_table(4, {{{{2, 1, 0}, {0, 1, 2}},
                                     {{3, 1, 0}},
                                     {{2, 1, 0}, {1, -1, 1}},
                                     {{3, 1, 0}, {1, 1, 1}},
                                     {{2, 1, 0}, {3, 1, 0}}}});
const RoleTable kC = make_table(4, {{{{0, 1, 0}},
                                     {{0, 1, 0}, {2, -1, 1}},
                                     {{1, 1, 0}},
                                     {{1, 1, 0}, {2, 1, 1}},
                                     {{0, 1, 0}, {1, 1, 0}}}});

// Base positions: A slot -> (row bit, column trit); B slot -> (row trit, column bit);
// C slot -> (j bit, i bit) for the variable c_{ji}.
constexpr std::array<std::pair<int, int>, 5> kAPos{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}}};
constexpr std::array<std::pair<int, int>, 4> kBPos{{{0, 0}, {0, 1}, {1, 0}, {2, 0}}};
constexpr std::array<std::pair<int, int>, 4> kCPos{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

const RoleTable& role_table(Role r) {
  switch (r) {
    case Role::a: return kA;
    case Role::b: return kB;
    default: return kC;
  }
}

const std::vector<std::string>& slot_names(Role r) {
  static const std::vector<std::string> a{"a11", "a12", "a13", "a22", "a23"};
  static const std::vector<std::string> b{"b11", "b12", "b21", "b31"};
  static const std::vector<std::string> c{"c11", "c12", "c21", "c22"};
  switch (r) {
    case Role::a: return a;
    case Role::b: return b;
    default: return c;
  }
}

IdentityCheck base_identity_check() {
  IdentityCheck out;
  std::size_t max_deg = kA.max_xdeg + kB.max_xdeg + kC.max_xdeg;
  out.by_degree.resize(max_deg + 1);
  const auto& an = slot_names(Role::a);
  const auto& bn = slot_names(Role::b);
  const auto& cn = slot_names(Role::c);
  for (std::size_t p = 0; p < kProducts; ++p)
    for (const auto& ta : kA.terms[p])
      for (const auto& tb : kB.terms[p])
        for (const auto& tc : kC.terms[p]) {
          std::string key = an[ta.slot] + " " + bn[tb.slot] + " " + cn[tc.slot];
          out.by_degree[ta.xdeg + tb.xdeg + tc.xdeg][key] += ta.sign * tb.sign * tc.sign;
        }
  for (auto& level : out.by_degree)
    for (auto it = level.begin(); it != level.end();)
      it = it->second == 0 ? level.erase(it) : std::next(it);

  // Target: every a_ik b_kj c_ji with all three positions admissible.
  std::map<std::string, long long> target;
  for (std::size_t sa = 0; sa < kAPos.size(); ++sa)
    for (std::size_t sb = 0; sb < kBPos.size(); ++sb)
      for (std::size_t sc = 0; sc < kCPos.size(); ++sc) {
        auto [i, k] = kAPos[sa];
        auto [k2, j] = kBPos[sb];
        auto [j2, i2] = kCPos[sc];
        if (k == k2 && j == j2 && i == i2) target[an[sa] + " " + bn[sb] + " " + cn[sc]] = 1;
      }

  std::ostringstream msg;
  bool ok = true;
  for (std::size_t d = 0; d < kExtractionPerLevel; ++d)
    if (!out.by_degree[d].empty()) {
      ok = false;
      msg << "x^" << d << " coefficient is nonzero; ";
    }
  if (out.by_degree[kExtractionPerLevel] != target) {
    ok = false;
    msg << "x^2 coefficient differs from the partial 2x3x2 product; ";
  }
  out.ok = ok;
  out.detail = ok ? "x^0 = x^1 = 0, x^2 = " + std::to_string(target.size()) + "-term target" : msg.str();
  return out;
}

StructuredFieldMatrix::StructuredFieldMatrix(Side side, std::size_t level)
    : side_(side), level_(level), values_(admissible_count(side, level), 0) {}

std::size_t StructuredFieldMatrix::admissible_count(Side side, std::size_t level) {
  return ipow(side == Side::a ? 5 : 4, level);
}

std::size_t StructuredFieldMatrix::rows() const { return side_ == Side::a ? ipow(2, level_) : ipow(3, level_); }
std::size_t StructuredFieldMatrix::cols() const { return side_ == Side::a ? ipow(3, level_) : ipow(2, level_); }

std::optional<std::size_t> StructuredFieldMatrix::slot_of(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols()) throw std::out_of_range("structured matrix index out of range");
  std::size_t slot = 0;
  std::size_t p3 = ipow(3, level_);
  for (std::size_t l = 0; l < level_; ++l) {
    p3 /= 3;
    int s = -1;
    if (side_ == Side::a) {
      int bit = static_cast<int>((r >> (level_ - 1 - l)) & 1);
      int trit = static_cast<int>((c / p3) % 3);
      for (std::size_t q = 0; q < kAPos.size(); ++q)
        if (kAPos[q] == std::pair<int, int>{bit, trit}) s = static_cast<int>(q);
      if (s < 0) return std::nullopt;
      slot = slot * 5 + static_cast<std::size_t>(s);
    } else {
      int trit = static_cast<int>((r / p3) % 3);
      int bit = static_cast<int>((c >> (level_ - 1 - l)) & 1);
      for (std::size_t q = 0; q < kBPos.size(); ++q)
        if (kBPos[q] == std::pair<int, int>{trit, bit}) s = static_cast<int>(q);
      if (s < 0) return std::nullopt;
      slot = slot * 4 + static_cast<std::size_t>(s);
    }
  }
  return slot;
}

std::pair<std::size_t, std::size_t> StructuredFieldMatrix::position_of(std::size_t slot) const {
  const std::size_t radix = side_ == Side::a ? 5 : 4;
  std::size_t div = ipow(radix, level_);
  std::size_t r = 0, c = 0;
  for (std::size_t l = 0; l < level_; ++l) {
    div /= radix;
    std::size_t digit = (slot / div) % radix;
    if (side_ == Side::a) {
      r = r * 2 + static_cast<std::size_t>(kAPos[digit].first);
      c = c * 3 + static_cast<std::size_t>(kAPos[digit].second);
    } else {
      r = r * 3 + static_cast<std::size_t>(kBPos[digit].first);
      c = c * 2 + static_cast<std::size_t>(kBPos[digit].second);
    }
  }
  return {r, c};
}

std::uint32_t StructuredFieldMatrix::at(std::size_t r, std::size_t c) const {
  auto s = slot_of(r, c);
  return s ? values_[*s] : 0;
}

void StructuredFieldMatrix::set(std::size_t r, std::size_t c, std::uint32_t v) {
  auto s = slot_of(r, c);
  if (!s) {
    if (v != 0) throw std::invalid_argument("nonzero entry outside the structured pattern");
    return;
  }
  values_[*s] = v;
}

StructuredFieldMatrix StructuredFieldMatrix::from_dense(Side side, std::size_t level, const FieldMatrix& dense) {
  StructuredFieldMatrix m(side, level);
  if (dense.rows() != m.rows() || dense.cols() != m.cols())
    throw std::invalid_argument("structured matrix: dense shape mismatch");
  for (std::size_t r = 0; r < dense.rows(); ++r)
    for (std::size_t c = 0; c < dense.cols(); ++c) m.set(r, c, dense(r, c));
  return m;
}

FieldMatrix StructuredFieldMatrix::to_dense() const {
  FieldMatrix d(rows(), cols());
  for (std::size_t s = 0; s < values_.size(); ++s) {
    auto [r, c] = position_of(s);
    d(r, c) = values_[s];
  }
  return d;
}

}  // namespace tropical::coppersmith
