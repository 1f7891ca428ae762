#include <map>
#include <stdexcept>

#include "coppersmith_engine.hpp"

namespace tropical::coppersmith {

using detail::ipow;

Shape shape_for(std::size_t M) {
  if (M == 0 || M % 5 != 0) throw std::invalid_argument("M must be a positive multiple of 5");
  Shape s;
  s.M = M;
  s.wide = std::size_t{1} << (4 * M / 5);
  s.narrow = std::size_t{1} << (M / 5);
  s.full = std::size_t{1} << M;
  std::size_t binom = 1;
  for (std::size_t i = 0; i < M / 5; ++i) binom = binom * (M - i) / (i + 1);
  s.mapped = binom * s.wide;
  return s;
}

std::size_t level_from_wide(std::size_t wide) {
  for (std::size_t M = 5; M <= 25; M += 5)
    if ((std::size_t{1} << (4 * M / 5)) == wide) return M;
  throw std::invalid_argument("operand shape does not match 2^{4M/5} for any M divisible by 5");
}

std::vector<std::size_t> mapped_indices(std::size_t M) {
  shape_for(M);
  std::vector<std::size_t> out;
  const std::size_t total = ipow(3, M);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t zeros = 0;
    for (std::size_t v = c, l = 0; l < M; ++l, v /= 3) zeros += (v % 3 == 0);
    if (zeros == M / 5) out.push_back(c);
  }
  return out;
}

VandermondeSpec VandermondeSpec::a_side(std::size_t M) {
  Shape s = shape_for(M);
  VandermondeSpec v;
  v.side_ = Side::a;
  v.level_ = M;
  v.powers_ = s.wide;
  for (std::size_t p = 0; p < s.full; ++p) v.nodes_.push_back(static_cast<std::uint32_t>(p + 1));
  return v;
}

VandermondeSpec VandermondeSpec::b_side(std::size_t M) {
  Shape s = shape_for(M);
  VandermondeSpec v;
  v.side_ = Side::b;
  v.level_ = M;
  v.powers_ = s.narrow;
  for (std::size_t j = 0; j < s.full; ++j) v.nodes_.push_back(static_cast<std::uint32_t>(j + 1));
  return v;
}

FieldMatrix VandermondeSpec::matrix(const PrimeField& f) const {
  // A side: powers x nodes with [r][p] = alpha_p^r. B side: nodes x powers with [j][i] = beta_j^i.
  FieldMatrix m = side_ == Side::a ? FieldMatrix(powers_, nodes_.size()) : FieldMatrix(nodes_.size(), powers_);
  for (std::size_t p = 0; p < nodes_.size(); ++p) {
    std::uint32_t v = 1;
    for (std::size_t r = 0; r < powers_; ++r) {
      if (side_ == Side::a)
        m(r, p) = v;
      else
        m(p, r) = v;
      v = f.mul(v, nodes_[p] % f.modulus());
    }
  }
  return m;
}

FieldMatrix lagrange_basis(const PrimeField& f, const std::vector<std::uint32_t>& nodes, OpCounter* counter) {
  const std::size_t s = nodes.size();
  std::uint64_t mults = 0;
  // master(x) = prod (x - node), coefficients low to high.
  std::vector<std::uint32_t> master{1};
  for (auto a : nodes) {
    std::vector<std::uint32_t> next(master.size() + 1, 0);
    std::uint32_t na = f.neg(a % f.modulus());
    for (std::size_t k = 0; k < master.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], master[k]);
      next[k] = f.add(next[k], f.mul(master[k], na));
    }
    mults += master.size();
    master = std::move(next);
  }
  FieldMatrix basis(s, s);
  std::vector<std::uint32_t> q(s);
  for (std::size_t p = 0; p < s; ++p) {
    std::uint32_t a = nodes[p] % f.modulus();
    // Synthetic division of master by (x - a).
    q[s - 1] = master[s];
    for (std::size_t k = s - 1; k > 0; --k) q[k - 1] = f.add(master[k], f.mul(a, q[k]));
    std::uint32_t denom = 0;
    for (std::size_t k = s; k-- > 0;) denom = f.add(f.mul(denom, a), q[k]);
    std::uint32_t inv = f.inv(denom);
    for (std::size_t k = 0; k < s; ++k) basis(p, k) = f.mul(q[k], inv);
    mults += 3 * s + 31;
  }
  if (counter) counter->field_mults += mults;
  return basis;
}

namespace {

// Per-M state shared across calls: mapped index set and cached Lagrange bases.
class Context {
 public:
  Context(const PrimeField& f, std::size_t M)
      : f(f), shape(shape_for(M)), mapped(mapped_indices(M)), a_nodes(VandermondeSpec::a_side(M)),
        b_nodes(VandermondeSpec::b_side(M)), a_prime(a_nodes.matrix(f)), b_prime(b_nodes.matrix(f)) {
    if ((std::uint64_t{1} << M) + 1 >= f.modulus()) throw std::invalid_argument("prime must exceed 2^M + 1");
  }

  // Rows p admissible in A column c (bit 0 wherever the trit is 0), or columns s
  // admissible in B row c (free where the trit is 0, zero elsewhere).
  std::vector<std::size_t> support(std::size_t c, Side side) const {
    const std::size_t M = shape.M;
    std::vector<std::size_t> free;
    std::size_t v = c;
    std::vector<std::size_t> trits(M);
    for (std::size_t l = M; l-- > 0; v /= 3) trits[l] = v % 3;
    for (std::size_t l = 0; l < M; ++l)
      if ((trits[l] == 0) == (side == Side::b)) free.push_back(M - 1 - l);
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < (std::size_t{1} << free.size()); ++m) {
      std::size_t idx = 0;
      for (std::size_t b = 0; b < free.size(); ++b)
        if ((m >> (free.size() - 1 - b)) & 1) idx |= std::size_t{1} << free[b];
      out.push_back(idx);
    }
    return out;
  }

  const FieldMatrix& lagrange(const std::vector<std::size_t>& support, const VandermondeSpec& v, OpCounter* counter) {
    std::vector<std::uint32_t> nodes;
    for (auto p : support) nodes.push_back(v.nodes()[p]);
    auto it = cache.find(nodes);
    if (it != cache.end()) return it->second;
    return cache.emplace(nodes, lagrange_basis(f, nodes, counter)).first->second;
  }

  const PrimeField& f;
  Shape shape;
  std::vector<std::size_t> mapped;
  VandermondeSpec a_nodes, b_nodes;
  FieldMatrix a_prime;  // wide x full
  FieldMatrix b_prime;  // full x narrow
  std::map<std::vector<std::uint32_t>, FieldMatrix> cache;
};

StructuredFieldMatrix decompose_in(Context& ctx, const FieldMatrix& in, Side side, const VandermondeSpec& v,
                                   OpCounter* counter) {
  const auto& f = ctx.f;
  const Shape& sh = ctx.shape;
  StructuredFieldMatrix out(side, sh.M);
  std::uint64_t mults = 0;
  if (side == Side::a) {
    if (in.rows() != sh.wide || in.cols() != sh.mapped) throw std::invalid_argument("decompose: A-side input shape mismatch");
    if (v.powers() != sh.wide) throw std::invalid_argument("decompose: Vandermonde shape mismatch");
    for (std::size_t t = 0; t < sh.mapped; ++t) {
      std::size_t c = ctx.mapped[t];
      auto rows = ctx.support(c, Side::a);
      const auto& L = ctx.lagrange(rows, v, counter);
      for (std::size_t pi = 0; pi < rows.size(); ++pi) {
        std::uint64_t acc = 0;
        for (std::size_t r = 0; r < sh.wide; ++r) acc += f.fold(static_cast<std::uint64_t>(L(pi, r)) * in(r, t));
        out.values()[*out.slot_of(rows[pi], c)] = f.reduce(acc);
      }
      mults += rows.size() * sh.wide;
    }
  } else {
    if (in.rows() != sh.mapped || in.cols() != sh.narrow) throw std::invalid_argument("decompose: B-side input shape mismatch");
    if (v.powers() != sh.narrow) throw std::invalid_argument("decompose: Vandermonde shape mismatch");
    for (std::size_t t = 0; t < sh.mapped; ++t) {
      std::size_t c = ctx.mapped[t];
      auto cols = ctx.support(c, Side::b);
      const auto& L = ctx.lagrange(cols, v, counter);
      for (std::size_t si = 0; si < cols.size(); ++si) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < sh.narrow; ++i) acc += f.fold(static_cast<std::uint64_t>(in(t, i)) * L(si, i));
        out.values()[*out.slot_of(c, cols[si])] = f.reduce(acc);
      }
      mults += cols.size() * sh.narrow;
    }
  }
  if (counter) counter->field_mults += mults;
  return out;
}

FieldMatrix algorithm2_in(Context& ctx, const FieldMatrix& bin, const FieldMatrix& cin, OpCounter* counter) {
  const auto& f = ctx.f;
  const Shape& sh = ctx.shape;
  if (bin.rows() != sh.mapped || bin.cols() != sh.narrow || cin.rows() != sh.narrow || cin.cols() != sh.wide)
    throw std::invalid_argument("algorithm2: shape mismatch");
  std::uint64_t mults = 0;
  auto b = decompose_in(ctx, bin, Side::b, ctx.b_nodes, counter);
  FieldMatrix c = multiply(f, multiply(f, ctx.b_prime, cin, &mults), ctx.a_prime, &mults);
  OpCounter inner;
  auto y = structured_multiply_to_a(f, b, c, &inner);
  FieldMatrix x(sh.mapped, sh.wide);
  std::vector<std::uint64_t> acc(sh.wide);
  for (std::size_t t = 0; t < sh.mapped; ++t) {
    std::size_t col = ctx.mapped[t];
    auto rows = ctx.support(col, Side::a);
    const auto& L = ctx.lagrange(rows, ctx.a_nodes, counter);
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t pi = 0; pi < rows.size(); ++pi) {
      std::uint64_t yp = y.values()[*y.slot_of(rows[pi], col)];
      if (!yp) continue;
      for (std::size_t r = 0; r < sh.wide; ++r) acc[r] += f.fold(yp * L(pi, r));
    }
    for (std::size_t r = 0; r < sh.wide; ++r) x(t, r) = f.reduce(acc[r]);
    mults += rows.size() * sh.wide;
  }
  if (counter) {
    *counter += inner;
    counter->field_mults += mults;
  }
  return x;
}

FieldMatrix algorithm3_in(Context& ctx, const FieldMatrix& ct, const FieldMatrix& bt, OpCounter* counter) {
  return algorithm2_in(ctx, bt.transposed(), ct.transposed(), counter).transposed();
}

// Elements are dense blocks; x is a field value, and leaf products are Algorithm 3 calls.
class BlockOps {
 public:
  BlockOps(Context& ctx, std::size_t xr, std::size_t xc, std::size_t yc, std::uint32_t x_value)
      : ctx_(ctx), xr_(xr), xc_(xc), yc_(yc) {
    const auto& f = ctx.f;
    pw_[0] = 1;
    for (std::size_t k = 1; k < pw_.size(); ++k) pw_[k] = f.mul(pw_[k - 1], x_value);
  }

  std::size_t width_x(std::size_t) const { return xr_ * xc_; }
  std::size_t width_y(std::size_t) const { return xc_ * yc_; }
  std::size_t width_out() const { return xr_ * yc_; }

  void axpy(std::uint32_t* dst, std::size_t wd, const std::uint32_t* src, std::size_t, const Term& t) {
    const auto& f = ctx_.f;
    if (t.xdeg == 0) {
      for (std::size_t e = 0; e < wd; ++e) dst[e] = t.sign > 0 ? f.add(dst[e], src[e]) : f.sub(dst[e], src[e]);
      return;
    }
    std::uint32_t s = t.sign > 0 ? pw_[t.xdeg] : f.neg(pw_[t.xdeg]);
    for (std::size_t e = 0; e < wd; ++e) dst[e] = f.add(dst[e], f.mul(s, src[e]));
    counter.field_mults += wd;
  }

  void leaf(std::uint32_t* out, const std::uint32_t* x, std::size_t, const std::uint32_t* y, std::size_t) {
    FieldMatrix a(xr_, xc_), b(xc_, yc_);
    std::copy(x, x + xr_ * xc_, a.data().begin());
    std::copy(y, y + xc_ * yc_, b.data().begin());
    FieldMatrix z = algorithm3_in(ctx_, a, b, &counter);
    const auto& f = ctx_.f;
    for (std::size_t e = 0; e < z.data().size(); ++e) out[e] = f.add(out[e], z.data()[e]);
  }

  OpCounter counter;

 private:
  Context& ctx_;
  std::size_t xr_, xc_, yc_;
  std::array<std::uint32_t, 4> pw_{};
};

void copy_block(const FieldMatrix& src, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols,
                std::uint32_t* dst) {
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) dst[r * cols + c] = src(r0 + r, c0 + c);
}

}  // namespace

StructuredFieldMatrix decompose(const PrimeField& f, const FieldMatrix& in, Side side, const VandermondeSpec& v,
                                OpCounter* counter) {
  if (v.side() != side) throw std::invalid_argument("decompose: Vandermonde side mismatch");
  Context ctx(f, v.level());
  return decompose_in(ctx, in, side, v, counter);
}

FieldMatrix algorithm1(const PrimeField& f, const FieldMatrix& ain, const FieldMatrix& bin, OpCounter* counter) {
  Context ctx(f, level_from_wide(ain.rows()));
  const Shape& sh = ctx.shape;
  if (ain.cols() != sh.mapped || bin.rows() != sh.mapped || bin.cols() != sh.narrow)
    throw std::invalid_argument("algorithm1: shape mismatch");
  OpCounter local;
  auto a = decompose_in(ctx, ain, Side::a, ctx.a_nodes, &local);
  auto b = decompose_in(ctx, bin, Side::b, ctx.b_nodes, &local);
  FieldMatrix z = structured_multiply(f, a, b, &local);
  FieldMatrix zb = multiply(f, z, ctx.b_prime, &local.field_mults);
  FieldMatrix out = multiply(f, ctx.a_prime, zb, &local.field_mults);
  if (counter) *counter += local;
  return out;
}

FieldMatrix algorithm2(const PrimeField& f, const FieldMatrix& bin, const FieldMatrix& cin, OpCounter* counter) {
  Context ctx(f, level_from_wide(cin.cols()));
  return algorithm2_in(ctx, bin, cin, counter);
}

FieldMatrix algorithm3(const PrimeField& f, const FieldMatrix& ct, const FieldMatrix& bt, OpCounter* counter) {
  Context ctx(f, level_from_wide(ct.rows()));
  return algorithm3_in(ctx, ct, bt, counter);
}

FieldMatrix tensored_rect_multiply(const PrimeField& f, const FieldMatrix& p, const FieldMatrix& q,
                                   OpCounter* counter) {
  std::size_t M = 0;
  for (std::size_t m = 5; m <= 25; m += 5)
    if ((std::size_t{1} << (2 * m / 5)) == p.cols()) M = m;
  if (M == 0) throw std::invalid_argument("tensored_rect_multiply: inner dimension must be 2^{2M/5}");
  Context ctx(f, M);
  const Shape& sh = ctx.shape;
  const std::size_t W = sh.wide, N = sh.narrow, Q = sh.mapped, F = sh.full;
  if (p.rows() != Q * W || q.rows() != N * N || q.cols() != W * Q)
    throw std::invalid_argument("tensored_rect_multiply: shape mismatch");
  const std::size_t K = 2 * M + 1;
  if ((f.modulus() - 1) % K != 0) throw std::invalid_argument("tensored_rect_multiply: need (2M+1) | p - 1");

  OpCounter local;
  const std::size_t pb = W * N;  // P block: W x N
  const std::size_t qb = N * Q;  // Q block: N x Q
  const std::size_t ob = W * Q;  // output block: W x Q

  // Outer decomposition of the P grid (Q x N blocks) on the B side.
  std::vector<std::uint32_t> bst(ipow(4, M) * pb, 0);
  {
    StructuredFieldMatrix probe(Side::b, M);
    std::vector<std::uint32_t> pblk(pb);
    for (std::size_t t = 0; t < Q; ++t) {
      std::size_t c = ctx.mapped[t];
      auto cols = ctx.support(c, Side::b);
      const auto& L = ctx.lagrange(cols, ctx.b_nodes, &local);
      for (std::size_t si = 0; si < cols.size(); ++si) {
        std::uint32_t* dst = bst.data() + *probe.slot_of(c, cols[si]) * pb;
        for (std::size_t i = 0; i < N; ++i) {
          copy_block(p, t * W, i * N, W, N, pblk.data());
          std::uint32_t w = L(si, i);
          for (std::size_t e = 0; e < pb; ++e) dst[e] = f.add(dst[e], f.mul(w, pblk[e]));
          local.field_mults += pb;
        }
      }
    }
  }

  // C = B' * Qgrid * A' over blocks; stored as c_{ji} slots for the recursion.
  std::vector<std::uint32_t> tmat(F * W * qb, 0);  // T[j][r] = sum_i beta_j^i Qgrid[i][r]
  std::vector<std::uint32_t> qblk(qb);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t r = 0; r < W; ++r) {
      copy_block(q, i * N, r * Q, N, Q, qblk.data());
      for (std::size_t j = 0; j < F; ++j) {
        std::uint32_t w = ctx.b_prime(j, i);
        std::uint32_t* dst = tmat.data() + (j * W + r) * qb;
        for (std::size_t e = 0; e < qb; ++e) dst[e] = f.add(dst[e], f.mul(w, qblk[e]));
        local.field_mults += qb;
      }
    }
  std::vector<std::uint32_t> cslots(ipow(4, M) * qb, 0);
  for (std::size_t j = 0; j < F; ++j)
    for (std::size_t i = 0; i < F; ++i) {
      std::size_t s = 0;
      for (std::size_t l = 0; l < M; ++l) {
        std::size_t sh_ = M - 1 - l;
        s = s * 4 + 2 * ((j >> sh_) & 1) + ((i >> sh_) & 1);
      }
      std::uint32_t* dst = cslots.data() + s * qb;
      for (std::size_t r = 0; r < W; ++r) {
        std::uint32_t w = ctx.a_prime(r, i);
        const std::uint32_t* src = tmat.data() + (j * W + r) * qb;
        for (std::size_t e = 0; e < qb; ++e) dst[e] = f.add(dst[e], f.mul(w, src[e]));
        local.field_mults += qb;
      }
    }

  // Mode-A recursion at x = omega^k for k < K, then coefficient extraction at x^{2M}.
  const std::uint32_t omega = f.root_of_unity(K);
  const std::size_t ext = extraction_degree(M);
  std::vector<std::uint32_t> ablocks(ipow(5, M) * ob, 0);
  std::vector<std::uint32_t> part(ablocks.size());
  for (std::size_t k = 0; k < K; ++k) {
    std::uint32_t xk = f.pow(omega, k);
    BlockOps ops(ctx, W, N, Q, xk);
    detail::TrilinearRecursion<BlockOps> rec(ops, role_table(Role::b), role_table(Role::c), role_table(Role::a), M);
    std::fill(part.begin(), part.end(), 0u);
    rec.run(bst.data(), cslots.data(), part.data());
    local += ops.counter;
    local.base_products += rec.leaves();
    std::uint32_t w = f.pow(f.inv(xk), ext);
    for (std::size_t e = 0; e < part.size(); ++e) ablocks[e] = f.add(ablocks[e], f.mul(w, part[e]));
    local.field_mults += part.size();
  }
  const std::uint32_t kinv = f.inv(static_cast<std::uint32_t>(K));

  // Inverse minors per mapped column, applied blockwise.
  FieldMatrix out(Q * W, W * Q);
  StructuredFieldMatrix probe(Side::a, M);
  std::vector<std::uint32_t> acc(ob);
  for (std::size_t t = 0; t < Q; ++t) {
    std::size_t col = ctx.mapped[t];
    auto rows = ctx.support(col, Side::a);
    const auto& L = ctx.lagrange(rows, ctx.a_nodes, &local);
    for (std::size_t r = 0; r < W; ++r) {
      std::fill(acc.begin(), acc.end(), 0u);
      for (std::size_t pi = 0; pi < rows.size(); ++pi) {
        std::uint32_t w = f.mul(L(pi, r), kinv);
        const std::uint32_t* src = ablocks.data() + *probe.slot_of(rows[pi], col) * ob;
        for (std::size_t e = 0; e < ob; ++e) acc[e] = f.add(acc[e], f.mul(w, src[e]));
        local.field_mults += ob + 1;
      }
      for (std::size_t a = 0; a < W; ++a)
        for (std::size_t b = 0; b < Q; ++b) out(t * W + a, r * Q + b) = acc[a * Q + b];
    }
  }
  if (counter) *counter += local;
  return out;
}

}  // namespace tropical::coppersmith
