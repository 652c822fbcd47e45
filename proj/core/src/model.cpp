#include "eventlens/model.hpp"

#include <algorithm>
#include <cmath>

#include "eventlens/error.hpp"

namespace eventlens {

namespace {

void require(bool ok, const Date& date, std::string_view what) {
  if (!ok) throw InvariantViolation(date.iso() + ": violates " + std::string(what));
}

void check_prices(Date date, double open, double high, double low, double close) {
  require(std::isfinite(open) && std::isfinite(high) && std::isfinite(low) &&
              std::isfinite(close),
          date, "prices finite");
  require(open > 0 && high > 0 && low > 0 && close > 0, date, "prices > 0");
  require(low <= high, date, "low <= high");
  require(low <= std::min(open, close), date, "low <= min(open, close)");
  require(high >= std::max(open, close), date, "high >= max(open, close)");
}

void check_trend(Date date, double score, double scale) {
  require(std::isfinite(score) && score >= 0.0 && score <= 100.0, date, "0 <= score <= 100");
  require(std::isfinite(scale) && scale > 0.0, date, "scale > 0");
}

template <class T>
std::vector<T> sorted_unique(std::span<const T> in) {
  std::vector<T> out(in.begin(), in.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const T& a, const T& b) { return a.date() < b.date(); });
  auto dup = std::adjacent_find(out.begin(), out.end(),
                                [](const T& a, const T& b) { return a.date() == b.date(); });
  if (dup != out.end()) throw DuplicateDate(dup->date().iso());
  return out;
}

}  // namespace

std::string_view to_string(PriceType t) {
  switch (t) {
    case PriceType::Open: return "Open";
    case PriceType::High: return "High";
    case PriceType::Low: return "Low";
    case PriceType::Close: return "Close";
  }
  return "?";
}

PriceBar::PriceBar(Date date, double open, double high, double low, double close,
                   std::optional<std::int64_t> volume)
    : date_(date), open_(open), high_(high), low_(low), close_(close), volume_(volume) {
  check_prices(date, open, high, low, close);
  require(!volume || *volume >= 0, date, "volume >= 0");
}

double PriceBar::price(PriceType t) const {
  switch (t) {
    case PriceType::Open: return open_;
    case PriceType::High: return high_;
    case PriceType::Low: return low_;
    case PriceType::Close: return close_;
  }
  return close_;
}

TrendPoint::TrendPoint(Date date, double score, double scale)
    : date_(date), score_(score), scale_(scale) {
  check_trend(date, score, scale);
}

MergedRecord::MergedRecord(const PriceBar& bar, const TrendPoint& trend)
    : MergedRecord(bar.date(), bar.open(), bar.high(), bar.low(), bar.close(), trend.score(),
                   trend.scale()) {
  require(bar.date() == trend.date(), bar.date(), "price date == trend date");
}

MergedRecord::MergedRecord(Date date, double open, double high, double low, double close,
                           double score, double scale)
    : date_(date),
      open_(open),
      high_(high),
      low_(low),
      close_(close),
      score_(score),
      scale_(scale) {
  check_prices(date, open, high, low, close);
  check_trend(date, score, scale);
}

double MergedRecord::price(PriceType t) const {
  switch (t) {
    case PriceType::Open: return open_;
    case PriceType::High: return high_;
    case PriceType::Low: return low_;
    case PriceType::Close: return close_;
  }
  return close_;
}

CompanySeries::CompanySeries(std::string company, std::string ticker,
                             std::vector<MergedRecord> records)
    : company_(std::move(company)), ticker_(std::move(ticker)), records_(std::move(records)) {
  for (std::size_t i = 1; i < records_.size(); ++i) {
    if (!(records_[i - 1].date() < records_[i].date())) {
      throw InvariantViolation(company_ + ": dates not strictly ascending at " +
                               records_[i].date().iso());
    }
  }
}

std::optional<Date> EventRegistry::lookup(std::string_view company) const {
  auto it = events_.find(company);
  if (it == events_.end()) return std::nullopt;
  return it->second;
}

bool EventRegistry::contains(std::string_view company) const {
  return events_.find(company) != events_.end();
}

std::string_view display_name(WindowLabel w) {
  switch (w) {
    case WindowLabel::Full: return "Full";
    case WindowLabel::PreRollout: return "Pre-Rollout";
    case WindowLabel::PostRollout: return "Post-Rollout";
  }
  return "?";
}

std::string_view file_token(WindowLabel w) {
  switch (w) {
    case WindowLabel::Full: return "full";
    case WindowLabel::PreRollout: return "pre_rollout";
    case WindowLabel::PostRollout: return "post_rollout";
  }
  return "?";
}

AnalysisWindow::AnalysisWindow(WindowLabel label, Date start, Date end)
    : label_(label), start_(start), end_(end) {
  if (end < start) {
    throw InvariantViolation("window " + start.iso() + " .. " + end.iso() +
                             " violates start <= end");
  }
}

std::vector<MergedRecord> merge_on_dates(std::span<const PriceBar> prices,
                                         std::span<const TrendPoint> trends) {
  const auto p = sorted_unique(prices);
  const auto t = sorted_unique(trends);

  std::vector<MergedRecord> out;
  out.reserve(std::min(p.size(), t.size()));
  auto pi = p.begin();
  auto ti = t.begin();
  while (pi != p.end() && ti != t.end()) {
    if (pi->date() < ti->date()) {
      ++pi;
    } else if (ti->date() < pi->date()) {
      ++ti;
    } else {
      out.emplace_back(*pi, *ti);
      ++pi;
      ++ti;
    }
  }
  return out;
}

EventSplit split_by_event(const CompanySeries& series, Date event) {
  const auto records = series.records();
  const auto mid = std::partition_point(records.begin(), records.end(),
                                        [&](const MergedRecord& r) { return r.date() < event; });
  return EventSplit{
      series.with_records({records.begin(), mid}),
      series.with_records({mid, records.end()}),
  };
}

CompanySeries restrict_to_window(const CompanySeries& series, const AnalysisWindow& window) {
  std::vector<MergedRecord> kept;
  for (const auto& r : series.records())
    if (window.contains(r.date())) kept.push_back(r);
  return series.with_records(std::move(kept));
}

}  // namespace eventlens
