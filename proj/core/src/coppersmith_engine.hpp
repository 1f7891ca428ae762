#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tropical/coppersmith.hpp"

namespace tropical::coppersmith::detail {

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Tensor-power recursion of the five-product identity: two input roles combine into
// five sub-problems per level; the output role accumulates them back. Ops supplies the
// element arithmetic (truncated polynomials or blocks).
template <class Ops>
class TrilinearRecursion {
 public:
  TrilinearRecursion(Ops& ops, const RoleTable& tx, const RoleTable& ty, const RoleTable& to, std::size_t M)
      : ops_(ops), tx_(tx), ty_(ty), to_(to), M_(M), bx_(M + 1), by_(M + 1), bo_(M + 1) {
    for (std::size_t d = 1; d <= M; ++d) {
      bx_[d].resize(ipow(tx.slots, M - d) * ops.width_x(d));
      by_[d].resize(ipow(ty.slots, M - d) * ops.width_y(d));
      bo_[d].resize(ipow(to.slots, M - d) * ops.width_out());
    }
  }

  // out must hold to.slots^M zeroed elements of width_out().
  void run(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) { rec(0, x, y, out); }

  std::uint64_t leaves() const { return leaves_; }

 private:
  void rec(std::size_t depth, const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) {
    const std::size_t wx0 = ops_.width_x(depth), wy0 = ops_.width_y(depth), wo = ops_.width_out();
    if (depth == M_) {
      ops_.leaf(out, x, wx0, y, wy0);
      ++leaves_;
      return;
    }
    const std::size_t L = M_ - depth;
    const std::size_t sx = ipow(tx_.slots, L - 1), sy = ipow(ty_.slots, L - 1), so = ipow(to_.slots, L - 1);
    const std::size_t wx1 = ops_.width_x(depth + 1), wy1 = ops_.width_y(depth + 1);
    std::uint32_t* X = bx_[depth + 1].data();
    std::uint32_t* Y = by_[depth + 1].data();
    std::uint32_t* O = bo_[depth + 1].data();
    for (std::size_t p = 0; p < kProducts; ++p) {
      std::fill(bx_[depth + 1].begin(), bx_[depth + 1].end(), 0u);
      for (const Term& t : tx_.terms[p])
        for (std::size_t e = 0; e < sx; ++e) ops_.axpy(X + e * wx1, wx1, x + (t.slot * sx + e) * wx0, wx0, t);
      std::fill(by_[depth + 1].begin(), by_[depth + 1].end(), 0u);
      for (const Term& t : ty_.terms[p])
        for (std::size_t e = 0; e < sy; ++e) ops_.axpy(Y + e * wy1, wy1, y + (t.slot * sy + e) * wy0, wy0, t);
      std::fill(bo_[depth + 1].begin(), bo_[depth + 1].end(), 0u);
      rec(depth + 1, X, Y, O);
      for (const Term& t : to_.terms[p])
        for (std::size_t e = 0; e < so; ++e) ops_.axpy(out + (t.slot * so + e) * wo, wo, O + e * wo, wo, t);
    }
  }

  Ops& ops_;
  const RoleTable& tx_;
  const RoleTable& ty_;
  const RoleTable& to_;
  std::size_t M_;
  std::vector<std::vector<std::uint32_t>> bx_, by_, bo_;
  std::uint64_t leaves_ = 0;
};

// Elements are coefficient vectors of polynomials in x truncated to `cap` terms.
class PolyOps {
 public:
  PolyOps(const PrimeField& f, std::size_t cap, std::size_t xdeg_x, std::size_t xdeg_y)
      : f_(f), cap_(cap), dx_(xdeg_x), dy_(xdeg_y), acc_(cap) {}

  std::size_t width_x(std::size_t depth) const { return std::min(cap_, dx_ * depth + 1); }
  std::size_t width_y(std::size_t depth) const { return std::min(cap_, dy_ * depth + 1); }
  std::size_t width_out() const { return cap_; }

  void axpy(std::uint32_t* dst, std::size_t wd, const std::uint32_t* src, std::size_t ws, const Term& t) {
    for (std::size_t c = 0; c < ws; ++c) {
      std::size_t k = c + t.xdeg;
      if (k >= wd) break;
      if (!src[c]) continue;
      dst[k] = t.sign > 0 ? f_.add(dst[k], src[c]) : f_.sub(dst[k], src[c]);
    }
  }

  void leaf(std::uint32_t* out, const std::uint32_t* x, std::size_t wx, const std::uint32_t* y, std::size_t wy) {
    std::fill(acc_.begin(), acc_.end(), 0);
    std::uint64_t n = 0;
    for (std::size_t a = 0; a < wx; ++a) {
      std::uint64_t xa = x[a];
      if (!xa) continue;
      std::size_t lim = std::min(wy, cap_ - a);
      for (std::size_t b = 0; b < lim; ++b) acc_[a + b] += f_.fold(xa * y[b]);
      n += lim;
    }
    for (std::size_t c = 0; c < cap_; ++c)
      if (acc_[c]) out[c] = f_.reduce(out[c] + acc_[c]);
    mults += n;
  }

  std::uint64_t mults = 0;

 private:
  const PrimeField& f_;
  std::size_t cap_, dx_, dy_;
  std::vector<std::uint64_t> acc_;
};

}  // namespace tropical::coppersmith::detail
