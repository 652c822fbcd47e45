#pragma once

#include <span>
#include <vector>

#include "eventlens/correlation.hpp"

namespace eventlens {

struct CorrelationReportTable {
  WindowLabel window = WindowLabel::Full;
  std::vector<CorrelationRow> rows;
  /// Per-column mean over the rows whose cell is defined; company "Average".
  CorrelationRow average_row;
};

/// Throws EmptyInput for no rows, std::invalid_argument if the rows do not
/// share one window label.
CorrelationReportTable aggregate_table(std::span<const CorrelationRow> rows);

}  // namespace eventlens
