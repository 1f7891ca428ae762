#include <stdexcept>

#include "tropical/bits.hpp"
#include "tropical/circuit.hpp"

namespace tropical::circuit {

std::uint32_t xnor_gate(CircuitDag& c, std::uint32_t a, std::uint32_t b) {
  return c.add_and({c.add_or({c.add_not(a), b}), c.add_or({a, c.add_not(b)})});
}

std::uint32_t xor_gate(CircuitDag& c, std::uint32_t a, std::uint32_t b) {
  return c.add_and({c.add_or({a, b}), c.add_or({c.add_not(a), c.add_not(b)})});
}

Bits emit_adder(CircuitDag& c, const Bits& x, const Bits& y) {
  const std::size_t t = x.size();
  if (y.size() != t || t == 0) throw std::invalid_argument("adder operands must have equal nonzero width");
  // Position p counts from the least significant bit.
  auto at = [t](const Bits& v, std::size_t p) { return v[t - 1 - p]; };
  std::vector<std::uint32_t> gen(t), prop(t);
  for (std::size_t p = 0; p < t; ++p) {
    gen[p] = c.add_and({at(x, p), at(y, p)});
    prop[p] = c.add_or({at(x, p), at(y, p)});
  }
  const std::uint32_t inf = c.add_or({c.add_and(x), c.add_and(y)});
  Bits out(t);
  for (std::size_t p = 0; p < t; ++p) {
    std::vector<std::uint32_t> terms;
    for (std::size_t q = 0; q < p; ++q) {
      std::vector<std::uint32_t> chain{gen[q]};
      for (std::size_t r = q + 1; r < p; ++r) chain.push_back(prop[r]);
      terms.push_back(c.add_and(chain));
    }
    std::uint32_t carry = c.add_or(terms);
    std::uint32_t sum = xor_gate(c, xor_gate(c, at(x, p), at(y, p)), carry);
    out[t - 1 - p] = c.add_or({sum, inf});
  }
  return out;
}

std::uint32_t emit_leq(CircuitDag& c, const Bits& x, const Bits& y) {
  const std::size_t t = x.size();
  if (y.size() != t || t == 0) throw std::invalid_argument("comparator operands must have equal nonzero width");
  std::vector<std::uint32_t> eq(t);
  for (std::size_t i = 0; i < t; ++i) eq[i] = xnor_gate(c, x[i], y[i]);
  std::vector<std::uint32_t> disjuncts{c.add_and(eq)};
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<std::uint32_t> conj{c.add_not(x[i]), y[i]};
    conj.insert(conj.end(), eq.begin(), eq.begin() + static_cast<std::ptrdiff_t>(i));
    disjuncts.push_back(c.add_and(conj));
  }
  return c.add_or(disjuncts);
}

std::vector<std::uint32_t> emit_is_min(CircuitDag& c, const std::vector<Bits>& xs) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<std::uint32_t> conj;
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) conj.push_back(emit_leq(c, xs[i], xs[j]));
    out.push_back(c.add_and(conj));
  }
  return out;
}

Bits emit_min_unique(CircuitDag& c, const std::vector<Bits>& xs) {
  if (xs.empty()) throw std::invalid_argument("minimum of an empty list");
  auto is_min = emit_is_min(c, xs);
  const std::size_t t = xs[0].size();
  Bits out(t);
  for (std::size_t l = 0; l < t; ++l) {
    std::vector<std::uint32_t> terms;
    for (std::size_t i = 0; i < xs.size(); ++i) terms.push_back(c.add_and({is_min[i], xs[i][l]}));
    out[l] = c.add_or(terms);
  }
  return out;
}

Bits emit_min_index(CircuitDag& c, const std::vector<Bits>& xs) {
  const std::size_t d = xs.size();
  if (d == 0) throw std::invalid_argument("minimum of an empty list");
  auto is_min = emit_is_min(c, xs);
  std::vector<Bits> f(d, Bits(d));
  for (std::size_t i = 0; i < d; ++i) {
    const std::uint64_t index = i + 1;
    const std::uint32_t not_min = c.add_not(is_min[i]);
    for (std::size_t j = 0; j < d; ++j) {
      bool bit = (index >> (d - 1 - j)) & 1;
      f[i][j] = c.add_or({c.add_and({is_min[i], c.add_constant(bit)}), not_min});
    }
  }
  return emit_min_unique(c, f);
}

namespace {

Bits inputs(CircuitDag& c, std::size_t t) {
  Bits b(t);
  for (auto& g : b) g = c.add_input();
  return b;
}

void outputs(CircuitDag& c, const Bits& b) {
  for (auto g : b) c.add_output(g);
}

}  // namespace

CircuitDag build_adder(std::size_t t) {
  if (t == 0) throw std::invalid_argument("t must be positive");
  CircuitDag c;
  Bits x = inputs(c, t), y = inputs(c, t);
  outputs(c, emit_adder(c, x, y));
  return c;
}

CircuitDag build_leq(std::size_t t) {
  if (t == 0) throw std::invalid_argument("t must be positive");
  CircuitDag c;
  Bits x = inputs(c, t), y = inputs(c, t);
  c.add_output(emit_leq(c, x, y));
  return c;
}

CircuitDag build_min_unique(std::size_t d, std::size_t t) {
  if (d == 0 || t == 0) throw std::invalid_argument("d and t must be positive");
  CircuitDag c;
  std::vector<Bits> xs;
  for (std::size_t i = 0; i < d; ++i) xs.push_back(inputs(c, t));
  outputs(c, emit_min_unique(c, xs));
  return c;
}

CircuitDag build_min_general(std::size_t d, std::size_t t) {
  if (d == 0 || t == 0) throw std::invalid_argument("d and t must be positive");
  if (d > 63) throw std::invalid_argument("d must be at most 63");
  CircuitDag c;
  std::vector<Bits> xs;
  for (std::size_t i = 0; i < d; ++i) xs.push_back(inputs(c, t));
  outputs(c, emit_min_index(c, xs));
  return c;
}

std::size_t minplus_bit_width(std::uint64_t max_weight) { return 3 + ceil_log2(max_weight); }

CircuitDag build_minplus_inner(std::size_t d, std::uint64_t max_weight) {
  if (d == 0 || d > 63) throw std::invalid_argument("d must be in [1, 63]");
  const std::size_t t = minplus_bit_width(max_weight);
  if (t > 62) throw std::invalid_argument("weight bound too large");
  CircuitDag c;
  std::vector<Bits> u, v;
  for (std::size_t k = 0; k < d; ++k) u.push_back(inputs(c, t));
  for (std::size_t k = 0; k < d; ++k) v.push_back(inputs(c, t));
  std::vector<Bits> sums;
  for (std::size_t k = 0; k < d; ++k) sums.push_back(emit_adder(c, u[k], v[k]));
  Bits istar = emit_min_index(c, sums);
  std::vector<std::uint32_t> select(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::uint32_t> match;
    for (std::size_t j = 0; j < d; ++j)
      match.push_back((((i + 1) >> (d - 1 - j)) & 1) ? istar[j] : c.add_not(istar[j]));
    select[i] = c.add_and(match);
  }
  for (std::size_t l = 0; l < t; ++l) {
    std::vector<std::uint32_t> terms;
    for (std::size_t i = 0; i < d; ++i) terms.push_back(c.add_and({select[i], sums[i][l]}));
    c.add_output(c.add_or(terms));
  }
  return c;
}

}  // namespace tropical::circuit
