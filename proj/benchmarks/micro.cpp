#include <benchmark/benchmark.h>

#include "tropical/coppersmith.hpp"
#include "tropical/f2_eval.hpp"
#include "tropical/fast_product.hpp"
#include "tropical/minplus.hpp"
#include "tropical/random.hpp"

using namespace tropical;

namespace {

WeightMatrix random_weights(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> w(0, 1000);
  WeightMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Weight(w(rng));
  return m;
}

void BM_F2Multiply(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto rng = make_stream({1, 1});
  auto x = BitMatrix::random(n, n, rng), y = BitMatrix::random(n, n, rng);
  std::uint64_t ops = 0;
  for (auto _ : state) benchmark::DoNotOptimize(f2_multiply(x, y, &ops));
  state.counters["word_ops"] = benchmark::Counter(static_cast<double>(ops), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_F2Multiply)->RangeMultiplier(2)->Range(128, 1024);

void BM_NaiveProduct(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto rng = make_stream({1, 2});
  auto a = random_weights(n, n, rng), b = random_weights(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(minplus_product_naive(a, b));
}
BENCHMARK(BM_NaiveProduct)->RangeMultiplier(2)->Range(32, 256);

void BM_FastProduct(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto rng = make_stream({1, 3});
  auto a = random_weights(n, n, rng), b = random_weights(n, n, rng);
  fast::FastProductConfig cfg;
  cfg.d = 4;
  for (auto _ : state) benchmark::DoNotOptimize(fast::minplus_product_fast(a, b, cfg));
}
BENCHMARK(BM_FastProduct)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_StructuredMultiply(benchmark::State& state) {
  auto M = static_cast<std::size_t>(state.range(0));
  PrimeField f;
  auto rng = make_stream({1, 4});
  coppersmith::StructuredFieldMatrix a(coppersmith::Side::a, M), b(coppersmith::Side::b, M);
  for (auto& v : a.values()) v = f.random(rng);
  for (auto& v : b.values()) v = f.random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(coppersmith::structured_multiply(f, a, b));
}
BENCHMARK(BM_StructuredMultiply)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
