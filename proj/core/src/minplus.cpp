#include "tropical/minplus.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tropical {

namespace {

void product_rows(const WeightMatrix& a, const WeightMatrix& b, ProductResult& out,
                  std::size_t r0, std::size_t r1) {
  const std::size_t inner = a.cols();
  for (std::size_t i = r0; i < r1; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Weight best = Weight::infinity();
      std::uint32_t arg = WitnessMatrix::kNoWitness;
      for (std::size_t k = 0; k < inner; ++k) {
        Weight s = a(i, k) + b(k, j);
        if (s < best) {
          best = s;
          arg = static_cast<std::uint32_t>(k);
        }
      }
      out.values(i, j) = best;
      out.witness(i, j) = arg;
    }
  }
}

}  // namespace

ProductResult minplus_product_naive(const WeightMatrix& a, const WeightMatrix& b,
                                    unsigned threads) {
  if (a.cols() != b.rows()) throw std::invalid_argument("min-plus product: inner dimension mismatch");
  ProductResult out{WeightMatrix(a.rows(), b.cols()), WitnessMatrix(a.rows(), b.cols())};
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(a.rows())));
  if (threads <= 1) {
    product_rows(a, b, out, 0, a.rows());
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  std::size_t chunk = (a.rows() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t r0 = t * chunk, r1 = std::min(a.rows(), r0 + chunk);
    pool.emplace_back([&, t, r0, r1] {
      try {
        product_rows(a, b, out, r0, r1);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

ProductStrategy naive_strategy(unsigned threads) {
  return [threads](const WeightMatrix& a, const WeightMatrix& b, std::uint64_t) {
    return minplus_product_naive(a, b, threads);
  };
}

}  // namespace tropical
