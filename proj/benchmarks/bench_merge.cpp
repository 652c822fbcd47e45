#include <benchmark/benchmark.h>

#include <vector>

#include "eventlens/model.hpp"

namespace {

// Trading days against a daily trend series, as in the bundled fixture.
void BM_MergeOnDates(benchmark::State& state) {
  const int days = static_cast<int>(state.range(0));
  const eventlens::Date start{2000, 1, 1};
  std::vector<eventlens::PriceBar> prices;
  std::vector<eventlens::TrendPoint> trends;
  for (int i = 0; i < days; ++i) {
    const auto d = start.add_days(i);
    trends.emplace_back(d, double(i % 101));
    if (i % 7 < 5) prices.emplace_back(d, 10.0, 11.0, 9.0, 10.5);
  }
  for (auto _ : state) benchmark::DoNotOptimize(eventlens::merge_on_dates(prices, trends));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MergeOnDates)->RangeMultiplier(8)->Range(64, 1 << 15);

}  // namespace
