#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eventlens/model.hpp"

namespace eventlens {

/// Strict parsing throws BadRow on the first rejected row. Lenient parsing
/// records rejections in the diagnostics and keeps going.
enum class ParseMode { Strict, Lenient };

struct RowDiagnostic {
  enum class Kind { Rejected, Skipped };
  std::size_t line;  // 1-based, header is line 1
  Kind kind;
  std::string reason;
};

/// Accounting: accepted + rejected + skipped == data_rows.
template <class Row>
struct ParseResult {
  std::vector<Row> rows;
  std::vector<RowDiagnostic> diagnostics;
  std::size_t data_rows = 0;

  [[nodiscard]] std::size_t count(RowDiagnostic::Kind k) const {
    std::size_t n = 0;
    for (const auto& d : diagnostics) n += d.kind == k;
    return n;
  }
};

using PriceParse = ParseResult<PriceBar>;
using TrendParse = ParseResult<TrendPoint>;

/// Finance-portal export: `Date,Open,High,Low,Close[,Adj Close][,Volume]`.
/// Columns may appear in any order; unknown columns are ignored. Rows whose
/// price fields are all `null` (non-trading placeholders) are skipped.
/// Output is sorted ascending. Throws MalformedHeader, DuplicateDate, and in
/// strict mode BadRow.
PriceParse parse_price_csv(std::string_view raw, ParseMode mode = ParseMode::Strict);

/// Canonical trend snapshot: `Date,Score[,Scale]`; Scale defaults to 1.0.
TrendParse parse_trend_csv(std::string_view raw, ParseMode mode = ParseMode::Strict);

/// Parses a merged snapshot (`Date,Open,High,Low,Close,Score,Scale`).
CompanySeries parse_merged_csv(std::string_view raw, std::string company, std::string ticker);

/// Whole-file read; throws IoError naming the path.
std::string read_file(const std::string& path);

}  // namespace eventlens
