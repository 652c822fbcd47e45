#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace eventlens {

/// Calendar date without time zone. Ordered by (year, month, day).
class Date {
 public:
  constexpr Date() = default;

  /// Throws std::invalid_argument if the triple is not a real calendar day.
  Date(int year, unsigned month, unsigned day);

  static Date from_days(std::chrono::sys_days days);

  /// Date of the UTC day containing `seconds` since the Unix epoch.
  static Date from_epoch_seconds(std::int64_t seconds);

  /// Strict `YYYY-MM-DD`. Returns nullopt for anything else.
  static std::optional<Date> parse_iso(std::string_view text);

  [[nodiscard]] int year() const { return int(ymd_.year()); }
  [[nodiscard]] unsigned month() const { return unsigned(ymd_.month()); }
  [[nodiscard]] unsigned day() const { return unsigned(ymd_.day()); }

  [[nodiscard]] std::chrono::sys_days days() const { return std::chrono::sys_days{ymd_}; }
  [[nodiscard]] std::int64_t epoch_seconds() const;
  [[nodiscard]] Date add_days(int n) const;
  [[nodiscard]] std::string iso() const;

  friend bool operator==(const Date& a, const Date& b) { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(const Date& a, const Date& b) {
    return a.key() <=> b.key();
  }

 private:
  explicit Date(std::chrono::year_month_day ymd) : ymd_(ymd) {}
  [[nodiscard]] std::int64_t key() const {
    return std::int64_t(int(ymd_.year())) * 10000 + unsigned(ymd_.month()) * 100 +
           unsigned(ymd_.day());
  }

  std::chrono::year_month_day ymd_{std::chrono::year{1970}, std::chrono::January,
                                   std::chrono::day{1}};
};

}  // namespace eventlens
