#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "eventlens/model.hpp"

namespace eventlens {

// Snapshot files carry ISO dates and six decimal places for every number.
// Identical inputs always produce identical bytes.
std::string format_trend_csv(std::span<const TrendPoint> trends);
std::string format_value_csv(std::span<const PriceBar> prices);
std::string format_merged_csv(std::span<const MergedRecord> merged);

struct SnapshotPaths {
  std::filesystem::path trend;
  std::filesystem::path value;
  std::filesystem::path merged;
};

/// `<dir>/<ticker>_trend.csv`, `<ticker>_value.csv`, `<ticker>_merged.csv`.
SnapshotPaths snapshot_paths(const std::filesystem::path& dir, std::string_view ticker);

/// Creates `dir` if needed. Throws IoError naming the failing path.
SnapshotPaths write_snapshots(const std::filesystem::path& dir, std::string_view ticker,
                              std::span<const PriceBar> prices, std::span<const TrendPoint> trends,
                              std::span<const MergedRecord> merged);

/// Writes `contents` verbatim (binary). Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace eventlens
