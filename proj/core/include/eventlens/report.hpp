#pragma once

#include <string>

#include "eventlens/table.hpp"

namespace eventlens {

enum class TableFormat { Markdown, Csv };

/// Rounds half away from zero at four decimals, using the exact binary
/// value of `v`. Never prints "-0.0000".
std::string format_fixed4(double v);

/// "N/A" or format_fixed4.
std::string format_cell(const Coefficient& c);

/// Company rows plus an Average row; columns Open, Close, High, Low, Avg.
/// Markdown cells carry a color token (`0.7661 [G]`) and each row ends with
/// the Avg strength band; CSV is plain numbers. N/A renders as `N/A`.
std::string render_table(const CorrelationReportTable& table, TableFormat format);

/// Six-by-six CSV of a correlation matrix, 6 d.p., N/A for undefined cells.
std::string render_matrix_csv(const CorrelationMatrix& matrix);

}  // namespace eventlens
