#include "tropical/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace tropical::circuit {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::input: return "INPUT";
    case GateKind::constant: return "CONST";
    case GateKind::not_: return "NOT";
    case GateKind::and_: return "AND";
    case GateKind::or_: return "OR";
    case GateKind::xor_: return "XOR";
  }
  return "?";
}

std::uint32_t CircuitDag::intern(GateKind kind, std::vector<std::uint32_t> fanin, bool value) {
  for (auto g : fanin)
    if (g >= gates_.size()) throw std::out_of_range("fan-in refers to a missing gate");
  std::string key;
  key.push_back(static_cast<char>(kind));
  key.push_back(value ? '1' : '0');
  for (auto g : fanin) key.append(reinterpret_cast<const char*>(&g), sizeof g);
  auto [it, fresh] = index_.emplace(std::move(key), static_cast<std::uint32_t>(gates_.size()));
  if (fresh) gates_.push_back(Gate{kind, std::move(fanin), value});
  return it->second;
}

std::uint32_t CircuitDag::add_input() {
  auto id = static_cast<std::uint32_t>(gates_.size());
  gates_.push_back(Gate{GateKind::input, {}, false});
  inputs_.push_back(id);
  return id;
}

std::uint32_t CircuitDag::add_constant(bool v) { return intern(GateKind::constant, {}, v); }

std::uint32_t CircuitDag::add_not(std::uint32_t a) { return intern(GateKind::not_, {a}, false); }

// Commutative gates sort their fan-in so equal sets share one gate.
std::uint32_t CircuitDag::add_and(std::vector<std::uint32_t> in) {
  if (in.empty()) return add_constant(true);
  std::sort(in.begin(), in.end());
  in.erase(std::unique(in.begin(), in.end()), in.end());
  return intern(GateKind::and_, std::move(in), false);
}

std::uint32_t CircuitDag::add_or(std::vector<std::uint32_t> in) {
  if (in.empty()) return add_constant(false);
  std::sort(in.begin(), in.end());
  in.erase(std::unique(in.begin(), in.end()), in.end());
  return intern(GateKind::or_, std::move(in), false);
}

std::uint32_t CircuitDag::add_xor(std::vector<std::uint32_t> in) {
  if (in.empty()) return add_constant(false);
  std::sort(in.begin(), in.end());
  return intern(GateKind::xor_, std::move(in), false);
}

std::size_t CircuitDag::gate_count() const {
  return static_cast<std::size_t>(std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) {
    return g.kind != GateKind::input && g.kind != GateKind::constant;
  }));
}

std::size_t CircuitDag::depth() const {
  std::vector<std::size_t> level(gates_.size(), 0);
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    if (g.kind == GateKind::input || g.kind == GateKind::constant) continue;
    std::size_t m = 0;
    for (auto f : g.fanin) m = std::max(m, level[f]);
    level[i] = m + 1;
  }
  std::size_t d = 0;
  for (auto o : outputs_) d = std::max(d, level[o]);
  return d;
}

std::size_t CircuitDag::max_fanin() const {
  std::size_t m = 0;
  for (const auto& g : gates_) m = std::max(m, g.fanin.size());
  return m;
}

bool CircuitDag::is_pure_and_or_not() const {
  return std::none_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind == GateKind::xor_; });
}

std::vector<std::uint64_t> CircuitDag::evaluate_words(std::span<const std::uint64_t> in) const {
  if (in.size() != inputs_.size()) throw std::invalid_argument("circuit input length mismatch");
  std::vector<std::uint64_t> val(gates_.size(), 0);
  std::size_t next_input = 0;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    std::uint64_t v = 0;
    switch (g.kind) {
      case GateKind::input: v = in[next_input++]; break;
      case GateKind::constant: v = g.value ? ~0ULL : 0; break;
      case GateKind::not_: v = ~val[g.fanin[0]]; break;
      case GateKind::and_:
        v = ~0ULL;
        for (auto f : g.fanin) v &= val[f];
        break;
      case GateKind::or_:
        for (auto f : g.fanin) v |= val[f];
        break;
      case GateKind::xor_:
        for (auto f : g.fanin) v ^= val[f];
        break;
    }
    val[i] = v;
  }
  std::vector<std::uint64_t> out;
  out.reserve(outputs_.size());
  for (auto o : outputs_) out.push_back(val[o]);
  return out;
}

std::vector<bool> CircuitDag::evaluate(const std::vector<bool>& in) const {
  std::vector<std::uint64_t> words(in.begin(), in.end());
  auto w = evaluate_words(words);
  std::vector<bool> out;
  for (auto x : w) out.push_back(x & 1);
  return out;
}

std::vector<std::vector<std::uint64_t>> evaluate_batch(const CircuitDag& c,
                                                       const std::vector<std::vector<std::uint64_t>>& batches,
                                                       unsigned threads) {
  std::vector<std::vector<std::uint64_t>> out(batches.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(batches.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < batches.size(); ++i) out[i] = c.evaluate_words(batches[i]);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < batches.size(); i += threads) out[i] = c.evaluate_words(batches[i]);
    });
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace tropical::circuit
