#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace tropical::circuit {

enum class GateKind : std::uint8_t { input, constant, not_, and_, or_, xor_ };

const char* kind_name(GateKind k);

struct Gate {
  GateKind kind;
  std::vector<std::uint32_t> fanin;
  bool value = false;  // constants only
};

// Gates are appended in topological order, so fan-in indices are always smaller
// than the gate's own index. Structurally identical gates are shared.
class CircuitDag {
 public:
  std::uint32_t add_input();
  std::uint32_t add_constant(bool v);
  std::uint32_t add_not(std::uint32_t a);
  std::uint32_t add_and(std::vector<std::uint32_t> in);
  std::uint32_t add_or(std::vector<std::uint32_t> in);
  std::uint32_t add_xor(std::vector<std::uint32_t> in);
  void add_output(std::uint32_t g) { outputs_.push_back(g); }

  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::uint32_t>& inputs() const { return inputs_; }
  const std::vector<std::uint32_t>& outputs() const { return outputs_; }
  std::size_t input_count() const { return inputs_.size(); }
  std::size_t size() const { return gates_.size(); }
  std::size_t gate_count() const;  // excludes inputs and constants

  // Longest path from an input to an output counted in non-input, non-constant gates.
  std::size_t depth() const;
  std::size_t max_fanin() const;
  bool is_pure_and_or_not() const;

  // Throws std::invalid_argument on an input length mismatch.
  std::vector<bool> evaluate(const std::vector<bool>& in) const;
  // Bit-parallel: lane b of word i is input i of assignment b.
  std::vector<std::uint64_t> evaluate_words(std::span<const std::uint64_t> in) const;

 private:
  std::uint32_t intern(GateKind kind, std::vector<std::uint32_t> fanin, bool value);

  std::vector<Gate> gates_;
  std::vector<std::uint32_t> inputs_;
  std::vector<std::uint32_t> outputs_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Evaluates many 64-lane batches, splitting them across threads.
std::vector<std::vector<std::uint64_t>> evaluate_batch(const CircuitDag& c,
                                                       const std::vector<std::vector<std::uint64_t>>& batches,
                                                       unsigned threads = 1);

// Bits are most significant first. The all-ones string encodes infinity.
using Bits = std::vector<std::uint32_t>;

// (not a or b) and (a or not b)
std::uint32_t xnor_gate(CircuitDag& c, std::uint32_t a, std::uint32_t b);
// (a or b) and (not a or not b)
std::uint32_t xor_gate(CircuitDag& c, std::uint32_t a, std::uint32_t b);

Bits emit_adder(CircuitDag& c, const Bits& x, const Bits& y);
std::uint32_t emit_leq(CircuitDag& c, const Bits& x, const Bits& y);
// MIN(x_i): x_i is a minimum of xs.
std::vector<std::uint32_t> emit_is_min(CircuitDag& c, const std::vector<Bits>& xs);
// Value bits of the minimum, read through the minimizers.
Bits emit_min_unique(CircuitDag& c, const std::vector<Bits>& xs);
// d-bit encoding of the 1-based smallest minimizing index.
Bits emit_min_index(CircuitDag& c, const std::vector<Bits>& xs);

// Inputs x then y, t bits each; t outputs.
CircuitDag build_adder(std::size_t t);
// Inputs x then y; one output [x <= y].
CircuitDag build_leq(std::size_t t);
// Inputs x_1..x_d, t bits each; t outputs holding the minimum value.
CircuitDag build_min_unique(std::size_t d, std::size_t t);
// Inputs x_1..x_d; d outputs holding the smallest minimizing index (1-based).
CircuitDag build_min_general(std::size_t d, std::size_t t);

std::size_t minplus_bit_width(std::uint64_t max_weight);
// Inputs u_1..u_d then v_1..v_d with t = minplus_bit_width(M); t outputs.
CircuitDag build_minplus_inner(std::size_t d, std::uint64_t max_weight);

}  // namespace tropical::circuit
