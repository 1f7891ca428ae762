#include "tropical/apsp.hpp"

#include <stdexcept>

namespace tropical {

namespace {

// Edge weight w becomes w*n + 1 so keys order paths by (distance, hop count).
WeightMatrix encode_hops(const WeightMatrix& w) {
  const std::size_t n = w.rows();
  WeightMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Weight x = w(i, j);
      if (i == j) {
        e(i, j) = Weight(0);
      } else if (x.is_finite()) {
        if (x.value() > (kOverflowLimit - 1) / n) throw OverflowError("edge weight too large for hop encoding");
        e(i, j) = Weight(x.value() * n + 1);
      }
    }
  }
  return e;
}

WeightMatrix decode_hops(const WeightMatrix& e) {
  const std::size_t n = e.rows();
  WeightMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (e(i, j).is_finite()) d(i, j) = Weight(e(i, j).value() / n);
  return d;
}

SuccessorMatrix initial_successors(const WeightMatrix& e) {
  const std::size_t n = e.rows();
  SuccessorMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (e(i, j).is_finite()) s(i, j) = static_cast<std::uint32_t>(j);
  return s;
}

}  // namespace

void validate_graph_matrix(const WeightMatrix& w) {
  if (!w.is_square()) throw std::invalid_argument("graph matrix must be square");
  for (std::size_t i = 0; i < w.rows(); ++i)
    if (w(i, i) != Weight(0)) throw std::invalid_argument("graph matrix diagonal must be 0");
  for (Weight x : w.entries())
    if (x.is_finite() && x.value() > kMaxInputWeight) throw std::invalid_argument("edge weight above 2^60");
}

ApspResult floyd_warshall(const WeightMatrix& w) {
  validate_graph_matrix(w);
  const std::size_t n = w.rows();
  WeightMatrix e = encode_hops(w);
  SuccessorMatrix next = initial_successors(e);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Weight ik = e(i, k);
      if (ik.is_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        Weight cand = ik + e(k, j);
        if (cand < e(i, j)) {
          e(i, j) = cand;
          next(i, j) = next(i, k);
        }
      }
    }
  }
  return {decode_hops(e), std::move(next)};
}

ApspResult apsp_by_squaring(const WeightMatrix& w, const ProductStrategy& product) {
  validate_graph_matrix(w);
  const std::size_t n = w.rows();
  WeightMatrix e = encode_hops(w);
  SuccessorMatrix next = initial_successors(e);
  std::size_t rounds = 0;
  while ((std::size_t{1} << rounds) < n) ++rounds;
  for (std::size_t r = 0; r < rounds; ++r) {
    ProductResult p = product(e, e, r);
    SuccessorMatrix old = next;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (p.values(i, j) < e(i, j)) {
          auto k = p.witness.get(i, j);
          if (!k) throw std::logic_error("product strategy returned finite value without witness");
          e(i, j) = p.values(i, j);
          next(i, j) = old(i, *k);
        }
      }
    }
  }
  return {decode_hops(e), std::move(next)};
}

std::vector<std::size_t> reconstruct_path(const SuccessorMatrix& succ, std::size_t s,
                                          std::size_t t) {
  const std::size_t n = succ.size();
  if (s >= n || t >= n) throw std::out_of_range("node index out of range");
  std::vector<std::size_t> path{s};
  if (s == t) return path;
  std::size_t cur = s;
  while (cur != t) {
    auto nx = succ.next(cur, t);
    if (!nx || path.size() > n) return {};
    cur = *nx;
    path.push_back(cur);
  }
  return path;
}

}  // namespace tropical
