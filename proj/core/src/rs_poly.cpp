#include "tropical/rs_poly.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "tropical/bits.hpp"
#include "tropical/random.hpp"

namespace tropical::rs {

RsParameters RsParameters::defaults(std::size_t n, std::size_t d, std::uint64_t seed) {
  RsParameters p;
  p.n = n;
  p.d = d;
  p.t = ceil_log2(2 * static_cast<std::uint64_t>(n));
  p.e = 2 + ceil_log2(d);
  p.ep = 3 + 2 * ceil_log2(d) + ceil_log2(p.t);
  p.seed = seed;
  return p;
}

std::size_t RsParameters::index_bits() const { return ceil_log2(d + 1); }

void RsParameters::validate() const {
  if (d == 0) throw std::invalid_argument("rs parameters: d must be positive");
  if (t == 0 || t > 62) throw std::invalid_argument("rs parameters: t must be in [1, 62]");
  if (n > 0 && (std::uint64_t{1} << t) < 2 * n)
    throw std::invalid_argument("rs parameters: t too small for rank range");
}

std::size_t leq_and_fan_in(std::size_t t, std::size_t m) { return m == 0 ? t : m + 1; }

namespace {

std::uint64_t bit_pos(std::size_t t, std::size_t i) { return std::uint64_t{1} << (t - i); }

AffineFactor derive_factor(std::size_t t, std::size_t m, std::uint64_t mask) {
  AffineFactor f;
  f.constant = true;
  std::size_t w = leq_and_fan_in(t, m);
  for (std::size_t j = 0; j < w; ++j) {
    if (!((mask >> j) & 1)) continue;
    if (m == 0 || j >= 2) {
      std::size_t i = m == 0 ? j + 1 : j - 1;  // eq_i = 1 + a_i + b_i, so eq_i + 1 = a_i + b_i
      f.a_mask ^= bit_pos(t, i);
      f.b_mask ^= bit_pos(t, i);
    } else if (j == 0) {
      f.a_mask ^= bit_pos(t, m);  // (1 + a_m) + 1 = a_m
    } else {
      f.b_mask ^= bit_pos(t, m);  // b_m + 1
      f.constant = !f.constant;
    }
  }
  return f;
}

std::uint64_t low_mask(std::size_t w) {
  return w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
}

void check_rank(std::uint64_t v, std::size_t t) {
  if (v < 1 || v > (std::uint64_t{1} << t)) throw std::invalid_argument("rank value outside [1, 2^t]");
}

bool msb_bit(std::uint64_t v, std::size_t t, std::size_t i) { return (v >> (t - i)) & 1; }

// Inputs of AND_m in fan-in order, computed from x = a - 1 and y = b - 1.
std::vector<std::uint8_t> and_inputs(std::size_t t, std::size_t m, std::uint64_t x, std::uint64_t y) {
  auto eq = [&](std::size_t i) -> std::uint8_t { return 1 ^ msb_bit(x, t, i) ^ msb_bit(y, t, i); };
  std::vector<std::uint8_t> in;
  if (m == 0) {
    for (std::size_t i = 1; i <= t; ++i) in.push_back(eq(i));
  } else {
    in.push_back(1 ^ msb_bit(x, t, m));
    in.push_back(msb_bit(y, t, m));
    for (std::size_t i = 1; i < m; ++i) in.push_back(eq(i));
  }
  return in;
}

}  // namespace

RandomBits draw_random_bits(const RsParameters& params, const StreamId& id) {
  params.validate();
  RandomBits b;
  b.d = params.d;
  b.e = params.e;
  b.t = params.t;
  b.ep = params.ep;
  b.stream = id;
  auto rng = make_stream({params.seed, id.call, id.block, id.rep, id.ell});
  b.outer.resize(b.d * b.e * b.d);
  for (std::size_t i = 0; i < b.outer.size(); i += 64) {
    std::uint64_t w = rng();
    for (std::size_t j = 0; j < 64 && i + j < b.outer.size(); ++j) b.outer[i + j] = (w >> j) & 1;
  }
  b.inner.resize((b.t + 1) * b.ep);
  b.factors.resize(b.inner.size());
  for (std::size_t m = 0; m <= b.t; ++m) {
    for (std::size_t r = 0; r < b.ep; ++r) {
      std::uint64_t mask = rng() & low_mask(leq_and_fan_in(b.t, m));
      b.inner[m * b.ep + r] = mask;
      b.factors[m * b.ep + r] = derive_factor(b.t, m, mask);
    }
  }
  return b;
}

bool approximate_and(std::span<const std::uint8_t> y, std::span<const std::uint8_t> rows,
                     std::size_t e) {
  const std::size_t d = y.size();
  if (rows.size() != e * d) throw std::invalid_argument("approximate_and: selection rows do not match input length");
  bool out = true;
  for (std::size_t r = 0; r < e; ++r) {
    bool s = true;
    for (std::size_t j = 0; j < d; ++j)
      if (rows[r * d + j]) s ^= !y[j];
    out = out && s;
  }
  return out;
}

bool leq_reference(std::uint64_t a, std::uint64_t b, std::size_t t) {
  check_rank(a, t);
  check_rank(b, t);
  bool acc = false;
  for (std::size_t m = 0; m <= t; ++m) {
    bool all = true;
    for (auto v : and_inputs(t, m, a - 1, b - 1)) all = all && v;
    acc ^= all;
  }
  return acc;
}

bool leq_prime_direct(const RandomBits& bits, std::uint64_t a, std::uint64_t b) {
  check_rank(a, bits.t);
  check_rank(b, bits.t);
  bool acc = false;
  for (std::size_t m = 0; m <= bits.t; ++m) {
    auto y = and_inputs(bits.t, m, a - 1, b - 1);
    std::vector<std::uint8_t> rows(bits.ep * y.size());
    for (std::size_t r = 0; r < bits.ep; ++r)
      for (std::size_t j = 0; j < y.size(); ++j) rows[r * y.size() + j] = (bits.inner_mask(m, r) >> j) & 1;
    acc ^= approximate_and(y, rows, bits.ep);
  }
  return acc;
}

SparseF2Polynomial build_leq_prime(const RsParameters& params, const RandomBits& bits) {
  SparseF2Polynomial total;
  for (std::size_t m = 0; m <= params.t; ++m) {
    auto prod = SparseF2Polynomial::constant(true);
    for (std::size_t r = 0; r < params.ep; ++r) {
      const auto& f = bits.factor(m, r);
      auto v = static_cast<std::uint32_t>(m * params.ep + r);
      auto lin = SparseF2Polynomial::constant(f.constant);
      if (f.a_mask) lin ^= SparseF2Polynomial::row_variable(v);
      if (f.b_mask) lin ^= SparseF2Polynomial::col_variable(v);
      prod = prod * lin;
    }
    total ^= prod;
  }
  return total;
}

std::vector<std::uint8_t> leq_prime_variables(const RandomBits& bits, std::uint64_t rank, bool row_side) {
  check_rank(rank, bits.t);
  std::vector<std::uint8_t> out(bits.factors.size());
  for (std::size_t q = 0; q < bits.factors.size(); ++q) {
    const auto& f = bits.factors[q];
    out[q] = parity((rank - 1) & (row_side ? f.a_mask : f.b_mask));
  }
  return out;
}

PreprocessedVariables preprocess_xors(const RsParameters& params,
                                      const fredman::RankedPairMatrices& ranked,
                                      const RandomBits& bits) {
  if (ranked.d != params.d || bits.d != params.d || bits.t != params.t || bits.ep != params.ep)
    throw std::invalid_argument("preprocess_xors: parameter mismatch");
  const std::size_t slots = ranked.slots();
  const std::size_t per_slot = params.factors_per_slot();
  PreprocessedVariables v;
  v.per_entry = slots * per_slot;
  v.row = BitMatrix(ranked.rows, v.per_entry);
  v.col = BitMatrix(ranked.cols, v.per_entry);
  for (std::size_t s = 0; s < slots; ++s) {
    for (std::size_t i = 0; i < ranked.rows; ++i) {
      std::uint64_t x = ranked.app(i, s) - 1;
      for (std::size_t q = 0; q < per_slot; ++q)
        if (parity(x & bits.factors[q].a_mask)) v.row.set(i, s * per_slot + q, true);
    }
    for (std::size_t j = 0; j < ranked.cols; ++j) {
      std::uint64_t y = ranked.bpp(s, j) - 1;
      for (std::size_t q = 0; q < per_slot; ++q)
        if (parity(y & bits.factors[q].b_mask)) v.col.set(j, s * per_slot + q, true);
    }
  }
  return v;
}

double monomial_budget_log2(std::size_t d, std::size_t t) {
  double ld = static_cast<double>(ceil_log2(d));
  double inner = static_cast<double>(ceil_log2(d + 1)) + static_cast<double>(ceil_log2(t + 1)) +
                 std::log2(3.0) * (3.0 + 2.0 * ld + static_cast<double>(ceil_log2(t)));
  return (1.0 + ld) * inner;
}

std::uint64_t monomial_budget(const RsParameters& params) {
  double x = monomial_budget_log2(params.d, params.t);
  if (x >= 64.0) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(std::exp2(x)));
}

double expansion_bound_log2(const RsParameters& params) {
  double per = std::log2(static_cast<double>(params.d + 1)) + std::log2(static_cast<double>(params.t + 1)) +
               static_cast<double>(params.ep) * std::log2(3.0);
  return std::log2(static_cast<double>(params.d)) + static_cast<double>(params.e) * per;
}

void check_expansion_budget(const RsParameters& params, std::uint64_t cap) {
  params.validate();
  double bound = expansion_bound_log2(params);
  if (bound > std::log2(static_cast<double>(cap))) {
    double budget = monomial_budget_log2(params.d, params.t);
    std::ostringstream msg;
    msg << "monomial budget 2^" << budget << " (bound for e=" << params.e << ", ep=" << params.ep
        << ": 2^" << bound << ") exceeds cap " << cap << "; use direct evaluation";
    throw BudgetExceeded(msg.str(), budget, bound);
  }
}

std::vector<std::size_t> candidates_for_bit(std::size_t d, std::size_t ell) {
  std::vector<std::size_t> ks;
  for (std::size_t k = 1; k <= d; ++k)
    if ((k >> ell) & 1) ks.push_back(k);
  return ks;
}

SparseF2Polynomial build_output_bit_polynomial(const RsParameters& params, const RandomBits& bits,
                                               std::size_t ell, std::uint64_t cap) {
  check_expansion_budget(params, cap);
  const std::size_t d = params.d;
  const auto per_slot = static_cast<std::uint32_t>(params.factors_per_slot());
  const SparseF2Polynomial leq = build_leq_prime(params, bits);

  SparseF2Polynomial total;
  for (std::size_t k : candidates_for_bit(d, ell)) {
    auto rows = bits.outer_rows(k - 1);
    auto prod = SparseF2Polynomial::constant(true);
    for (std::size_t r = 0; r < params.e; ++r) {
      std::size_t weight = 0;
      SparseF2Polynomial lin;
      for (std::size_t kp = 0; kp < d; ++kp) {
        if (!rows[r * d + kp]) continue;
        ++weight;
        auto off = static_cast<std::uint32_t>(fredman::slot_index(d, k - 1, kp)) * per_slot;
        lin ^= leq.shifted(off, off);
      }
      lin ^= SparseF2Polynomial::constant(weight % 2 == 0);
      prod = prod * lin;
    }
    total ^= prod;
  }
  return total;
}

bool output_bit_direct(const RsParameters& params, const RandomBits& bits,
                       const fredman::RankedPairMatrices& ranked, std::size_t i, std::size_t j,
                       std::size_t ell) {
  const std::size_t d = params.d;
  bool acc = false;
  std::vector<std::uint8_t> y(d);
  for (std::size_t k : candidates_for_bit(d, ell)) {
    for (std::size_t kp = 0; kp < d; ++kp) {
      std::size_t s = fredman::slot_index(d, k - 1, kp);
      y[kp] = leq_prime_direct(bits, ranked.app(i, s), ranked.bpp(s, j));
    }
    acc ^= approximate_and(y, bits.outer_rows(k - 1), params.e);
  }
  return acc;
}

BitMatrix output_bits_sliced(const RsParameters& params, const RandomBits& bits,
                             const PreprocessedVariables& vars, const BitMatrix& col_vars_t,
                             std::size_t ell, std::uint64_t* ops) {
  const std::size_t d = params.d;
  const std::size_t slots = d * d;
  const std::size_t per_slot = params.factors_per_slot();
  const std::size_t rows = vars.row.rows();
  const std::size_t cols = col_vars_t.cols();
  const std::size_t words = col_vars_t.words_per_row();
  if (col_vars_t.rows() != vars.per_entry || vars.row.cols() != vars.per_entry)
    throw std::invalid_argument("output_bits_sliced: variable table shape mismatch");

  const auto ks = candidates_for_bit(d, ell);
  // Parity constant of each outer selection row.
  std::vector<std::uint64_t> outer_const(d * params.e);
  for (std::size_t k = 0; k < d; ++k) {
    auto r = bits.outer_rows(k);
    for (std::size_t q = 0; q < params.e; ++q) {
      std::size_t w = 0;
      for (std::size_t kp = 0; kp < d; ++kp) w += r[q * d + kp];
      outer_const[k * params.e + q] = (w % 2 == 0) ? ~std::uint64_t{0} : 0;
    }
  }

  BitMatrix out(rows, cols);
  std::vector<std::uint64_t> leq(slots);
  std::vector<std::uint8_t> xrow(vars.per_entry);
  const std::uint64_t zero = 0;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t v = 0; v < vars.per_entry; ++v) xrow[v] = vars.row.get(i, v);
    for (std::size_t w = 0; w < words; ++w) {
      for (std::size_t s = 0; s < slots; ++s) {
        std::uint64_t acc = 0;
        for (std::size_t m = 0; m <= params.t; ++m) {
          std::uint64_t a = ~std::uint64_t{0};
          for (std::size_t r = 0; r < params.ep && a; ++r) {
            const auto& f = bits.factor(m, r);
            std::size_t v = s * per_slot + m * params.ep + r;
            std::uint64_t yw = f.b_mask ? col_vars_t.row_words(v)[w] : zero;
            bool flip = f.constant ^ (f.a_mask ? xrow[v] != 0 : false);
            a &= flip ? ~yw : yw;
            ++count;
          }
          acc ^= a;
        }
        leq[s] = acc;
      }
      std::uint64_t res = 0;
      for (std::size_t k : ks) {
        auto r = bits.outer_rows(k - 1);
        std::uint64_t e_acc = ~std::uint64_t{0};
        for (std::size_t q = 0; q < params.e; ++q) {
          std::uint64_t p = outer_const[(k - 1) * params.e + q];
          for (std::size_t kp = 0; kp < d; ++kp)
            if (r[q * d + kp]) p ^= leq[fredman::slot_index(d, k - 1, kp)];
          e_acc &= p;
          count += d + 1;
        }
        res ^= e_acc;
      }
      if (w + 1 == words) res &= out.tail_mask();
      out.row_words(i)[w] = res;
    }
  }
  if (ops) *ops += count;
  return out;
}

}  // namespace tropical::rs
