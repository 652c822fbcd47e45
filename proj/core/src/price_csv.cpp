#include <array>

#include "csv_util.hpp"
#include "eventlens/error.hpp"
#include "eventlens/ingest.hpp"

namespace eventlens {

namespace {

bool is_null(std::string_view s) { return s == "null" || s == "NaN" || s.empty(); }

}  // namespace

PriceParse parse_price_csv(std::string_view raw, ParseMode mode) {
  const auto lines = detail::split_lines(raw);
  if (lines.empty()) throw MalformedHeader("missing header row");

  const detail::Header header(detail::split_fields(lines.front().text));
  const std::size_t date_col = header.require("Date");
  const std::array<std::size_t, 4> price_cols{header.require("Open"), header.require("High"),
                                              header.require("Low"), header.require("Close")};
  const auto volume_col = header.index_of("Volume");
  static constexpr std::array<const char*, 4> kNames{"Open", "High", "Low", "Close"};

  PriceParse result;
  auto reject = [&](std::size_t line, std::string reason) {
    if (mode == ParseMode::Strict) throw BadRow(line, reason);
    result.diagnostics.push_back({line, RowDiagnostic::Kind::Rejected, std::move(reason)});
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    ++result.data_rows;
    const auto fields = detail::split_fields(line.text);
    if (fields.size() != header.size()) {
      reject(line.number, "expected " + std::to_string(header.size()) + " fields, got " +
                              std::to_string(fields.size()));
      continue;
    }
    const auto date = Date::parse_iso(fields[date_col]);
    if (!date) {
      reject(line.number, "unparsable date '" + fields[date_col] + "'");
      continue;
    }

    bool all_null = true;
    for (auto c : price_cols) all_null = all_null && is_null(fields[c]);
    if (all_null) {
      result.diagnostics.push_back(
          {line.number, RowDiagnostic::Kind::Skipped, date->iso() + ": no prices (null row)"});
      continue;
    }

    std::array<double, 4> px{};
    std::string bad;
    for (std::size_t k = 0; k < 4; ++k) {
      auto v = detail::parse_double(fields[price_cols[k]]);
      if (!v) {
        bad = std::string("unparsable ") + kNames[k] + " '" + fields[price_cols[k]] + "'";
        break;
      }
      px[k] = *v;
    }
    if (!bad.empty()) {
      reject(line.number, bad);
      continue;
    }

    std::optional<std::int64_t> volume;
    if (volume_col && !is_null(fields[*volume_col])) {
      auto v = detail::parse_integer(fields[*volume_col]);
      if (!v) {
        reject(line.number, "unparsable Volume '" + fields[*volume_col] + "'");
        continue;
      }
      volume = *v;
    }

    try {
      result.rows.emplace_back(*date, px[0], px[1], px[2], px[3], volume);
    } catch (const InvariantViolation& e) {
      reject(line.number, e.what());
    }
  }

  detail::sort_unique_by_date(result.rows);
  return result;
}

}  // namespace eventlens
