#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eventlens::detail {

struct CsvLine {
  std::size_t number;  // 1-based
  std::string_view text;
};

/// Splits on `\n`, trimming a trailing `\r`. Blank lines are dropped, a
/// leading UTF-8 BOM is removed.
std::vector<CsvLine> split_lines(std::string_view raw);

/// Comma split with double-quote support; fields are trimmed of spaces.
std::vector<std::string> split_fields(std::string_view line);

std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_integer(std::string_view s);

/// Maps header names to column indices. Lookup is exact match.
class Header {
 public:
  explicit Header(std::vector<std::string> names);

  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
  [[nodiscard]] std::size_t require(std::string_view name) const;  // throws MalformedHeader
  [[nodiscard]] std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

/// `%.6f` with `-0.000000` normalised to `0.000000`.
std::string fixed6(double v);

}  // namespace eventlens::detail

#include <algorithm>

#include "eventlens/error.hpp"

namespace eventlens::detail {

/// Sorts ascending by date; throws DuplicateDate on a repeated date.
template <class T>
void sort_unique_by_date(std::vector<T>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const T& a, const T& b) { return a.date() < b.date(); });
  auto dup = std::adjacent_find(rows.begin(), rows.end(),
                                [](const T& a, const T& b) { return a.date() == b.date(); });
  if (dup != rows.end()) throw DuplicateDate(dup->date().iso());
}

}  // namespace eventlens::detail
