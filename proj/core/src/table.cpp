#include "eventlens/table.hpp"

#include <stdexcept>

namespace eventlens {

namespace {

Coefficient column_mean(std::span<const CorrelationRow> rows, auto&& cell) {
  long double sum = 0;
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (const Coefficient c = cell(r)) {
      sum += *c;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return static_cast<double>(sum / static_cast<long double>(n));
}

}  // namespace

CorrelationReportTable aggregate_table(std::span<const CorrelationRow> rows) {
  if (rows.empty()) throw EmptyInput("aggregate_table: no rows");
  const WindowLabel window = rows.front().window;
  for (const auto& r : rows) {
    if (r.window != window)
      throw std::invalid_argument("aggregate_table: rows span multiple windows");
  }

  CorrelationReportTable table{window, {rows.begin(), rows.end()}, {}};
  table.average_row.company = "Average";
  table.average_row.window = window;
  for (std::size_t k = 0; k < 4; ++k) {
    table.average_row.coefficients[k] =
        column_mean(rows, [k](const CorrelationRow& r) { return r.coefficients[k]; });
  }
  table.average_row.avg = column_mean(rows, [](const CorrelationRow& r) { return r.avg; });
  return table;
}

}  // namespace eventlens
