#include "eventlens/snapshot.hpp"

#include <fstream>

#include "csv_util.hpp"
#include "eventlens/error.hpp"

namespace eventlens {

using detail::fixed6;

std::string format_trend_csv(std::span<const TrendPoint> trends) {
  std::string out = "Date,Score,Scale\n";
  for (const auto& t : trends)
    out += t.date().iso() + ',' + fixed6(t.score()) + ',' + fixed6(t.scale()) + '\n';
  return out;
}

std::string format_value_csv(std::span<const PriceBar> prices) {
  std::string out = "Date,Open,High,Low,Close\n";
  for (const auto& p : prices) {
    out += p.date().iso() + ',' + fixed6(p.open()) + ',' + fixed6(p.high()) + ',' +
           fixed6(p.low()) + ',' + fixed6(p.close()) + '\n';
  }
  return out;
}

std::string format_merged_csv(std::span<const MergedRecord> merged) {
  std::string out = "Date,Open,High,Low,Close,Score,Scale\n";
  for (const auto& r : merged) {
    out += r.date().iso() + ',' + fixed6(r.open()) + ',' + fixed6(r.high()) + ',' +
           fixed6(r.low()) + ',' + fixed6(r.close()) + ',' + fixed6(r.score()) + ',' +
           fixed6(r.scale()) + '\n';
  }
  return out;
}

SnapshotPaths snapshot_paths(const std::filesystem::path& dir, std::string_view ticker) {
  const std::string t(ticker);
  return {dir / (t + "_trend.csv"), dir / (t + "_value.csv"), dir / (t + "_merged.csv")};
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError(path.string(), "write failed");
}

SnapshotPaths write_snapshots(const std::filesystem::path& dir, std::string_view ticker,
                              std::span<const PriceBar> prices, std::span<const TrendPoint> trends,
                              std::span<const MergedRecord> merged) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError(dir.string(), ec.message());
  auto paths = snapshot_paths(dir, ticker);
  write_file(paths.trend, format_trend_csv(trends));
  write_file(paths.value, format_value_csv(prices));
  write_file(paths.merged, format_merged_csv(merged));
  return paths;
}

}  // namespace eventlens
