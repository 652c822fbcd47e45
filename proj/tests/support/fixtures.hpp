#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "eventlens/model.hpp"

namespace eventlens::test {

/// Unique scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::uint64_t counter = 0;
    const auto base = std::filesystem::temp_directory_path();
    std::random_device rd;
    for (;;) {
      path_ = base / ("eventlens_test_" + std::to_string(rd()) + "_" + std::to_string(counter++));
      if (std::filesystem::create_directory(path_)) break;
    }
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  [[nodiscard]] const std::filesystem::path& path() const { return path_; }
  [[nodiscard]] std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline Date day(int y, unsigned m, unsigned d) { return Date{y, m, d}; }

/// Bar whose four prices all equal `close`.
inline PriceBar flat_bar(Date d, double close) { return PriceBar{d, close, close, close, close}; }

inline MergedRecord record(Date d, double close, double score, double scale = 1.0) {
  return MergedRecord{d, close, close + 1.0, close - 0.5, close, score, scale};
}

/// Consecutive-day series starting at `start` from (close, score) pairs.
inline CompanySeries series_from(const std::string& company, Date start,
                                 const std::vector<std::pair<double, double>>& close_score) {
  std::vector<MergedRecord> rows;
  Date d = start;
  for (const auto& [close, score] : close_score) {
    rows.push_back(record(d, close, score));
    d = d.add_days(1);
  }
  return CompanySeries{company, company.substr(0, 4), std::move(rows)};
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (double(rng() >> 11) * 0x1.0p-53);
}

}  // namespace eventlens::test
