#include "eventlens/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace eventlens {

namespace {

bool agrees(double snapshot, double source) {
  return std::fabs(snapshot - source) <= kSnapshotTolerance + 1e-12 * std::fabs(source);
}

template <class T>
std::map<Date, const T*> index_by_date(std::span<const T> rows) {
  std::map<Date, const T*> out;
  for (const auto& r : rows) out.emplace(r.date(), &r);
  return out;
}

}  // namespace

VerificationReport verify_against_source(const CompanySeries& snapshot,
                                         std::span<const PriceBar> raw_prices,
                                         std::span<const TrendPoint> raw_trends,
                                         std::size_t sample_size, std::uint64_t seed) {
  if (sample_size == 0) throw std::invalid_argument("sample_size must be >= 1");

  VerificationReport report;
  report.seed = seed;
  report.requested = sample_size;

  const auto records = snapshot.records();
  std::vector<std::size_t> picks(records.size());
  std::iota(picks.begin(), picks.end(), std::size_t{0});
  if (sample_size < records.size()) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> sampled;
    sampled.reserve(sample_size);
    std::sample(picks.begin(), picks.end(), std::back_inserter(sampled), sample_size, rng);
    picks = std::move(sampled);
  }

  const auto prices = index_by_date(raw_prices);
  const auto trends = index_by_date(raw_trends);

  for (std::size_t i : picks) {
    const MergedRecord& r = records[i];
    report.checked.push_back(r.date());
    auto p = prices.find(r.date());
    auto t = trends.find(r.date());
    if (p == prices.end() || t == trends.end()) {
      report.mismatches.push_back({r.date(), "date", std::nullopt, std::nullopt});
      continue;
    }
    const std::pair<const char*, std::pair<double, double>> fields[] = {
        {"open", {r.open(), p->second->open()}},   {"high", {r.high(), p->second->high()}},
        {"low", {r.low(), p->second->low()}},      {"close", {r.close(), p->second->close()}},
        {"score", {r.score(), t->second->score()}}, {"scale", {r.scale(), t->second->scale()}},
    };
    for (const auto& [name, values] : fields) {
      if (!agrees(values.first, values.second))
        report.mismatches.push_back({r.date(), name, values.first, values.second});
    }
  }
  return report;
}

}  // namespace eventlens
