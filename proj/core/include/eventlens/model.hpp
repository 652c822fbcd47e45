#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eventlens/date.hpp"

namespace eventlens {

enum class PriceType { Open, High, Low, Close };

/// Column order used by report tables: Open, Close, High, Low.
inline constexpr std::array<PriceType, 4> kReportPriceOrder{PriceType::Open, PriceType::Close,
                                                            PriceType::High, PriceType::Low};

std::string_view to_string(PriceType t);

/// One trading day of OHLC prices. Construction enforces
/// 0 < low <= min(open, close) <= max(open, close) <= high.
class PriceBar {
 public:
  PriceBar(Date date, double open, double high, double low, double close,
           std::optional<std::int64_t> volume = std::nullopt);

  [[nodiscard]] Date date() const { return date_; }
  [[nodiscard]] double open() const { return open_; }
  [[nodiscard]] double high() const { return high_; }
  [[nodiscard]] double low() const { return low_; }
  [[nodiscard]] double close() const { return close_; }
  [[nodiscard]] std::optional<std::int64_t> volume() const { return volume_; }
  [[nodiscard]] double price(PriceType t) const;

  friend bool operator==(const PriceBar&, const PriceBar&) = default;

 private:
  Date date_;
  double open_, high_, low_, close_;
  std::optional<std::int64_t> volume_;
};

/// Daily search-interest score in [0, 100] with its positive rescaling factor.
class TrendPoint {
 public:
  TrendPoint(Date date, double score, double scale = 1.0);

  [[nodiscard]] Date date() const { return date_; }
  [[nodiscard]] double score() const { return score_; }
  [[nodiscard]] double scale() const { return scale_; }

  friend bool operator==(const TrendPoint&, const TrendPoint&) = default;

 private:
  Date date_;
  double score_, scale_;
};

class MergedRecord {
 public:
  /// Throws InvariantViolation if the dates differ.
  MergedRecord(const PriceBar& bar, const TrendPoint& trend);
  MergedRecord(Date date, double open, double high, double low, double close, double score,
               double scale);

  [[nodiscard]] Date date() const { return date_; }
  [[nodiscard]] double open() const { return open_; }
  [[nodiscard]] double high() const { return high_; }
  [[nodiscard]] double low() const { return low_; }
  [[nodiscard]] double close() const { return close_; }
  [[nodiscard]] double score() const { return score_; }
  [[nodiscard]] double scale() const { return scale_; }
  [[nodiscard]] double price(PriceType t) const;

  friend bool operator==(const MergedRecord&, const MergedRecord&) = default;

 private:
  Date date_;
  double open_, high_, low_, close_, score_, scale_;
};

/// Date-joined rows for one company, strictly ascending by date.
class CompanySeries {
 public:
  CompanySeries(std::string company, std::string ticker, std::vector<MergedRecord> records);

  [[nodiscard]] const std::string& company() const { return company_; }
  [[nodiscard]] const std::string& ticker() const { return ticker_; }
  [[nodiscard]] std::span<const MergedRecord> records() const { return records_; }
  [[nodiscard]] std::size_t size() const { return records_.size(); }
  [[nodiscard]] bool empty() const { return records_.empty(); }

  [[nodiscard]] CompanySeries with_records(std::vector<MergedRecord> records) const {
    return CompanySeries{company_, ticker_, std::move(records)};
  }

  friend bool operator==(const CompanySeries&, const CompanySeries&) = default;

 private:
  std::string company_;
  std::string ticker_;
  std::vector<MergedRecord> records_;
};

/// Company -> optional event date. Unknown companies look up as absent.
class EventRegistry {
 public:
  EventRegistry() = default;
  EventRegistry(std::initializer_list<std::pair<const std::string, std::optional<Date>>> init)
      : events_(init) {}

  void set(std::string company, std::optional<Date> event) {
    events_[std::move(company)] = event;
  }
  [[nodiscard]] std::optional<Date> lookup(std::string_view company) const;
  [[nodiscard]] bool contains(std::string_view company) const;
  [[nodiscard]] const std::map<std::string, std::optional<Date>, std::less<>>& entries() const {
    return events_;
  }

 private:
  std::map<std::string, std::optional<Date>, std::less<>> events_;
};

enum class WindowLabel { Full, PreRollout, PostRollout };

inline constexpr std::array<WindowLabel, 3> kAllWindows{WindowLabel::Full, WindowLabel::PreRollout,
                                                        WindowLabel::PostRollout};

/// Human-readable name: "Full", "Pre-Rollout", "Post-Rollout".
std::string_view display_name(WindowLabel w);
/// File-name token: "full", "pre_rollout", "post_rollout".
std::string_view file_token(WindowLabel w);

/// Inclusive [start, end] date range.
class AnalysisWindow {
 public:
  AnalysisWindow(WindowLabel label, Date start, Date end);

  [[nodiscard]] WindowLabel label() const { return label_; }
  [[nodiscard]] Date start() const { return start_; }
  [[nodiscard]] Date end() const { return end_; }
  [[nodiscard]] bool contains(Date d) const { return start_ <= d && d <= end_; }

  friend bool operator==(const AnalysisWindow&, const AnalysisWindow&) = default;

 private:
  WindowLabel label_;
  Date start_, end_;
};

/// Inner join on date. Inputs must each have unique dates; output is ascending.
std::vector<MergedRecord> merge_on_dates(std::span<const PriceBar> prices,
                                         std::span<const TrendPoint> trends);

struct EventSplit {
  CompanySeries pre;   // date < event
  CompanySeries post;  // date >= event
};

EventSplit split_by_event(const CompanySeries& series, Date event);

CompanySeries restrict_to_window(const CompanySeries& series, const AnalysisWindow& window);

}  // namespace eventlens
