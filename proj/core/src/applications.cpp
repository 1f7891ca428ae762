#include "tropical/applications.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace tropical::apps {

MetricVerdict is_metric(const WeightMatrix& d, const ProductStrategy& product) {
  if (!d.is_square()) throw std::invalid_argument("distance matrix must be square");
  const std::size_t n = d.rows();
  auto fail = [](const char* what, std::size_t i, std::size_t j) {
    MetricVerdict v;
    v.metric = false;
    v.property = what;
    v.cell = std::array<std::size_t, 2>{i, j};
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) != Weight(0)) return fail("diagonal", i, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d(i, j) == Weight(0)) return fail("positivity", i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d(i, j) != d(j, i)) return fail("symmetry", i, j);
  ProductResult sq = product(d, d, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sq.values(i, j) < d(i, j)) {
        MetricVerdict v;
        v.metric = false;
        v.property = "triangle";
        v.witness = std::array<std::size_t, 3>{i, sq.witness(i, j), j};
        return v;
      }
  return {};
}

namespace {

// Rotates so the smallest node comes first; undirected triangles also pick the
// orientation with the smaller second node. Gives a total order for tie-breaks.
Triangle canonical(Triangle t, bool directed) {
  std::array<std::size_t, 3> c{t.u, t.v, t.w};
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  if (!directed && c[2] < c[1]) std::swap(c[1], c[2]);
  return {c[0], c[1], c[2], t.weight};
}

bool better(const Triangle& a, const std::optional<Triangle>& b) {
  if (!b) return true;
  return std::tie(a.weight, a.u, a.v, a.w) < std::tie(b->weight, b->u, b->v, b->w);
}

void offer(std::optional<Triangle>& best, const Triangle& t, bool directed) {
  Triangle c = canonical(t, directed);
  if (better(c, best)) best = c;
}

}  // namespace

std::optional<Triangle> min_triangle_brute(const EdgeListGraph& g) {
  WeightMatrix a = g.adjacency();
  std::optional<Triangle> best;
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t k = 0; k < g.n; ++k)
      for (std::size_t j = 0; j < g.n; ++j) {
        if (i == k || k == j || i == j) continue;
        Weight w = a(i, k) + a(k, j) + a(j, i);
        if (w.is_finite()) offer(best, {i, k, j, w}, g.directed);
      }
  return best;
}

std::optional<Triangle> min_triangle_dense(const EdgeListGraph& g, const ProductStrategy& product) {
  WeightMatrix a = g.adjacency();
  ProductResult two = product(a, a, 0);
  std::optional<Triangle> best;
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) {
      if (i == j || a(j, i).is_inf() || two.values(i, j).is_inf()) continue;
      auto k = two.witness.get(i, j);
      if (!k || *k == i || *k == j) continue;
      offer(best, {i, *k, j, two.values(i, j) + a(j, i)}, g.directed);
    }
  return best;
}

std::optional<Triangle> min_triangle_sparse(const EdgeListGraph& g, std::size_t delta,
                                            const ProductStrategy& product, unsigned threads) {
  g.validate();
  const std::size_t m = g.edges.size();
  if (delta == 0) delta = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(m)))));

  using Adj = std::unordered_map<std::size_t, Weight>;
  std::vector<Adj> out(g.n), in(g.n);
  auto put = [](Adj& adj, std::size_t k, Weight w) {
    auto [it, fresh] = adj.emplace(k, w);
    if (!fresh) it->second = min(it->second, w);
  };
  for (const auto& e : g.edges) {
    put(out[e.u], e.v, e.w);
    put(in[e.v], e.u, e.w);
    if (!g.directed) {
      put(out[e.v], e.u, e.w);
      put(in[e.u], e.v, e.w);
    }
  }
  std::vector<std::size_t> degree(g.n);
  for (std::size_t v = 0; v < g.n; ++v) {
    Adj all = out[v];
    for (const auto& [k, w] : in[v]) all.emplace(k, w);
    degree[v] = all.size();
  }

  // Case 1: triangles through a node of degree at most delta.
  std::vector<std::size_t> low;
  for (std::size_t v = 0; v < g.n; ++v)
    if (degree[v] <= delta) low.push_back(v);
  threads = std::max(1u, threads);
  std::vector<std::optional<Triangle>> partial(threads);
  auto scan = [&](unsigned t) {
    for (std::size_t idx = t; idx < low.size(); idx += threads) {
      std::size_t v = low[idx];
      for (const auto& [x, wvx] : out[v])
        for (const auto& [y, wyv] : in[v]) {
          if (x == y) continue;
          auto it = out[x].find(y);
          if (it == out[x].end()) continue;
          offer(partial[t], {v, x, y, wvx + it->second + wyv}, g.directed);
        }
    }
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(scan, t);
    for (auto& th : pool) th.join();
  }
  std::optional<Triangle> best;
  for (const auto& p : partial)
    if (p && better(*p, best)) best = p;

  // Case 2: triangles entirely among high-degree nodes.
  std::vector<std::size_t> high, local(g.n, g.n);
  for (std::size_t v = 0; v < g.n; ++v)
    if (degree[v] > delta) {
      local[v] = high.size();
      high.push_back(v);
    }
  if (high.size() >= 3) {
    EdgeListGraph sub;
    sub.n = high.size();
    sub.directed = g.directed;
    for (const auto& e : g.edges)
      if (local[e.u] < g.n && local[e.v] < g.n) sub.edges.push_back({local[e.u], local[e.v], e.w});
    if (auto t = min_triangle_dense(sub, product))
      offer(best, {high[t->u], high[t->v], high[t->w], t->weight}, g.directed);
  }
  return best;
}

std::vector<Weight> minplus_convolution(const std::vector<Weight>& x, const std::vector<Weight>& y,
                                        ConvolutionMode mode, const ProductStrategy& product) {
  if (x.size() != y.size()) throw std::invalid_argument("convolution operands must have equal length");
  const std::size_t n = x.size();
  if (n == 0) return {};
  std::vector<Weight> out(2 * n - 1, Weight::infinity());
  if (mode == ConvolutionMode::naive) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[k + j] = min(out[k + j], x[k] + y[j]);
    return out;
  }
  // Blocks of width b; for each offset s < 2b - 1 one (nb x b) by (b x nb) product
  // gives min over a of x[p*b + a] + y[q*b + s - a], which lands at (p + q)*b + s.
  const std::size_t b = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const std::size_t nb = (n + b - 1) / b;
  auto xv = [&](std::size_t i) { return i < n ? x[i] : Weight::infinity(); };
  auto yv = [&](std::size_t i) { return i < n ? y[i] : Weight::infinity(); };
  WeightMatrix left(nb, b);
  for (std::size_t p = 0; p < nb; ++p)
    for (std::size_t a = 0; a < b; ++a) left(p, a) = xv(p * b + a);
  for (std::size_t s = 0; s + 1 < 2 * b; ++s) {
    WeightMatrix right(b, nb);
    for (std::size_t a = 0; a < b; ++a)
      for (std::size_t q = 0; q < nb; ++q)
        if (s >= a && s - a < b) right(a, q) = yv(q * b + s - a);
    ProductResult r = product(left, right, s);
    for (std::size_t p = 0; p < nb; ++p)
      for (std::size_t q = 0; q < nb; ++q) {
        std::size_t i = (p + q) * b + s;
        if (i < out.size()) out[i] = min(out[i], r.values(p, q));
      }
  }
  return out;
}

}  // namespace tropical::apps
