#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eventlens/model.hpp"

namespace eventlens {

struct FieldMismatch {
  Date date;
  std::string field;               // "open", ..., "scale", or "date" when the day is missing
  std::optional<double> snapshot;  // value recorded in the snapshot
  std::optional<double> source;    // value re-derived from the raw input
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::size_t requested = 0;
  std::vector<Date> checked;  // ascending, each row at most once
  std::vector<FieldMismatch> mismatches;

  [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// Values agree when they match at the snapshot precision (6 d.p.).
inline constexpr double kSnapshotTolerance = 5e-7;

/// Re-derives `sample_size` seeded, randomly chosen merged rows from the raw
/// inputs and compares every field. Falls back to checking every row when
/// `sample_size >= snapshot.size()`. Throws std::invalid_argument when
/// `sample_size == 0`.
VerificationReport verify_against_source(const CompanySeries& snapshot,
                                         std::span<const PriceBar> raw_prices,
                                         std::span<const TrendPoint> raw_trends,
                                         std::size_t sample_size, std::uint64_t seed);

}  // namespace eventlens
