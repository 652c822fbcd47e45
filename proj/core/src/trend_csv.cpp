#include "csv_util.hpp"
#include "eventlens/error.hpp"
#include "eventlens/ingest.hpp"

namespace eventlens {

TrendParse parse_trend_csv(std::string_view raw, ParseMode mode) {
  const auto lines = detail::split_lines(raw);
  if (lines.empty()) throw MalformedHeader("missing header row");

  const detail::Header header(detail::split_fields(lines.front().text));
  const std::size_t date_col = header.require("Date");
  const std::size_t score_col = header.require("Score");
  const auto scale_col = header.index_of("Scale");

  TrendParse result;
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
    const auto score = detail::parse_double(fields[score_col]);
    if (!score) {
      reject(line.number, "unparsable Score '" + fields[score_col] + "'");
      continue;
    }
    double scale = 1.0;
    if (scale_col) {
      const auto s = detail::parse_double(fields[*scale_col]);
      if (!s) {
        reject(line.number, "unparsable Scale '" + fields[*scale_col] + "'");
        continue;
      }
      scale = *s;
    }
    try {
      result.rows.emplace_back(*date, *score, scale);
    } catch (const InvariantViolation& e) {
      reject(line.number, e.what());
    }
  }

  detail::sort_unique_by_date(result.rows);
  return result;
}

CompanySeries parse_merged_csv(std::string_view raw, std::string company, std::string ticker) {
  const auto lines = detail::split_lines(raw);
  if (lines.empty()) throw MalformedHeader("missing header row");
  const detail::Header header(detail::split_fields(lines.front().text));
  const std::size_t cols[] = {header.require("Date"),  header.require("Open"),
                              header.require("High"),  header.require("Low"),
                              header.require("Close"), header.require("Score"),
                              header.require("Scale")};

  std::vector<MergedRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto fields = detail::split_fields(line.text);
    if (fields.size() != header.size()) throw BadRow(line.number, "wrong field count");
    const auto date = Date::parse_iso(fields[cols[0]]);
    if (!date) throw BadRow(line.number, "unparsable date '" + fields[cols[0]] + "'");
    double v[6];
    for (int k = 0; k < 6; ++k) {
      auto d = detail::parse_double(fields[cols[k + 1]]);
      if (!d) throw BadRow(line.number, "unparsable number '" + fields[cols[k + 1]] + "'");
      v[k] = *d;
    }
    try {
      records.emplace_back(*date, v[0], v[1], v[2], v[3], v[4], v[5]);
    } catch (const InvariantViolation& e) {
      throw BadRow(line.number, e.what());
    }
  }
  detail::sort_unique_by_date(records);
  return CompanySeries{std::move(company), std::move(ticker), std::move(records)};
}

}  // namespace eventlens
