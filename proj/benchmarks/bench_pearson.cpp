#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "eventlens/correlation.hpp"

namespace {

std::vector<double> random_series(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

void BM_Pearson(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = random_series(n, 1), y = random_series(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(eventlens::pearson(x, y));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Pearson)->RangeMultiplier(4)->Range(8, 1 << 16);

void BM_CorrelationMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::array<std::vector<double>, eventlens::kMatrixSize> cols;
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = random_series(n, 10 + i);
  for (auto _ : state) benchmark::DoNotOptimize(eventlens::correlation_matrix(cols));
}
BENCHMARK(BM_CorrelationMatrix)->Arg(322)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
