#include "eventlens/date.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace eventlens {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

bool parse_digits(std::string_view s, int& out) {
  for (char c : s)
    if (c < '0' || c > '9') return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

Date::Date(int year, unsigned month, unsigned day)
    : ymd_(std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}) {
  if (!ymd_.ok()) {
    throw std::invalid_argument("invalid calendar date " + std::to_string(year) + "-" +
                                std::to_string(month) + "-" + std::to_string(day));
  }
}

Date Date::from_days(std::chrono::sys_days days) { return Date{std::chrono::year_month_day{days}}; }

Date Date::from_epoch_seconds(std::int64_t seconds) {
  std::int64_t d = seconds / kSecondsPerDay;
  if (seconds % kSecondsPerDay < 0) --d;
  return from_days(std::chrono::sys_days{std::chrono::days{d}});
}

std::optional<Date> Date::parse_iso(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int y = 0, m = 0, d = 0;
  if (!parse_digits(text.substr(0, 4), y) || !parse_digits(text.substr(5, 2), m) ||
      !parse_digits(text.substr(8, 2), d))
    return std::nullopt;
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                  std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) return std::nullopt;
  return Date{ymd};
}

std::int64_t Date::epoch_seconds() const {
  return std::int64_t(days().time_since_epoch().count()) * kSecondsPerDay;
}

Date Date::add_days(int n) const { return from_days(days() + std::chrono::days{n}); }

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year(), month(), day());
  return buf;
}

}  // namespace eventlens
