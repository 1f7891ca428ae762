#include "tropical/fredman.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace tropical::fredman {

std::uint64_t infinity_surrogate(const WeightMatrix& a, const WeightMatrix& b) {
  std::uint64_t mx = 0;
  for (Weight w : a.entries())
    if (w.is_finite()) mx = std::max(mx, w.value());
  for (Weight w : b.entries())
    if (w.is_finite()) mx = std::max(mx, w.value());
  if (mx > (kOverflowLimit - 1) / 2) throw OverflowError("no room for infinity surrogate");
  return 2 * mx + 1;
}

PerturbedPair perturb(const WeightMatrix& a, const WeightMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("perturb: inner dimension mismatch");
  PerturbedPair p;
  p.rows = a.rows();
  p.inner = a.cols();
  p.cols = b.cols();
  p.scale = std::max(a.rows(), a.cols()) + 1;

  bool any_inf = false;
  for (Weight w : a.entries()) any_inf |= w.is_inf();
  for (Weight w : b.entries()) any_inf |= w.is_inf();
  std::uint64_t sur = infinity_surrogate(a, b);
  if (any_inf) p.surrogate = sur;

  // Each perturbed sum must stay below 2^62.
  std::uint64_t top = any_inf ? sur : (sur - 1) / 2;
  if (top > (kOverflowLimit / 2 - p.inner - 1) / p.scale)
    throw OverflowError("perturbed weights exceed 2^62");

  auto raw = [&](Weight w) { return static_cast<std::int64_t>(w.is_inf() ? sur : w.value()); };
  auto sc = static_cast<std::int64_t>(p.scale);
  p.a.resize(p.rows * p.inner);
  p.b.resize(p.inner * p.cols);
  for (std::size_t i = 0; i < p.rows; ++i)
    for (std::size_t k = 0; k < p.inner; ++k)
      p.a[i * p.inner + k] = raw(a(i, k)) * sc + static_cast<std::int64_t>(k + 1);
  for (std::size_t k = 0; k < p.inner; ++k)
    for (std::size_t j = 0; j < p.cols; ++j) p.b[k * p.cols + j] = raw(b(k, j)) * sc;
  return p;
}

DifferenceMatrices difference_matrices(const PerturbedPair& p) {
  DifferenceMatrices d;
  d.rows = p.rows;
  d.d = p.inner;
  d.cols = p.cols;
  const std::size_t s2 = d.slots();
  d.a.resize(d.rows * s2);
  d.b.resize(s2 * d.cols);
  for (std::size_t k = 0; k < d.d; ++k) {
    for (std::size_t kp = 0; kp < d.d; ++kp) {
      std::size_t s = slot_index(d.d, k, kp);
      for (std::size_t i = 0; i < d.rows; ++i) d.a[i * s2 + s] = p.ap(i, k) - p.ap(i, kp);
      for (std::size_t j = 0; j < d.cols; ++j) d.b[s * d.cols + j] = p.bp(kp, j) - p.bp(k, j);
    }
  }
  return d;
}

RankedPairMatrices rank_replace(const DifferenceMatrices& diff) {
  RankedPairMatrices r;
  r.rows = diff.rows;
  r.d = diff.d;
  r.cols = diff.cols;
  const std::size_t s2 = r.slots();
  r.a.resize(r.rows * s2);
  r.b.resize(s2 * r.cols);

  // (value, side, index): side 0 = A entry, so A wins ties against B.
  std::vector<std::tuple<std::int64_t, int, std::size_t>> items;
  items.reserve(r.rows + r.cols);
  for (std::size_t s = 0; s < s2; ++s) {
    items.clear();
    for (std::size_t i = 0; i < r.rows; ++i) items.emplace_back(diff.apr(i, s), 0, i);
    for (std::size_t j = 0; j < r.cols; ++j) items.emplace_back(diff.bpr(s, j), 1, j);
    std::sort(items.begin(), items.end());
    for (std::size_t pos = 0; pos < items.size(); ++pos) {
      auto [v, side, idx] = items[pos];
      auto rank = static_cast<std::uint32_t>(pos + 1);
      if (side == 0)
        r.a[idx * s2 + s] = rank;
      else
        r.b[s * r.cols + idx] = rank;
    }
  }
  return r;
}

}  // namespace tropical::fredman
