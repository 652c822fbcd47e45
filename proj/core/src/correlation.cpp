#include <cmath>
#include <stdexcept>

#include "eventlens/correlation.hpp"

namespace eventlens {

namespace {

std::vector<double> column(const CompanySeries& s, MatrixColumn c) {
  std::vector<double> out;
  out.reserve(s.size());
  for (const auto& r : s.records()) {
    switch (c) {
      case MatrixColumn::Open: out.push_back(r.open()); break;
      case MatrixColumn::High: out.push_back(r.high()); break;
      case MatrixColumn::Low: out.push_back(r.low()); break;
      case MatrixColumn::Close: out.push_back(r.close()); break;
      case MatrixColumn::Score: out.push_back(r.score()); break;
      case MatrixColumn::Scale: out.push_back(r.scale()); break;
    }
  }
  return out;
}

constexpr std::array<PriceType, 4> kPriceTypes{PriceType::Open, PriceType::High, PriceType::Low,
                                               PriceType::Close};

}  // namespace

CorrelationRow CorrelationRow::make(std::string company, WindowLabel window,
                                    std::array<Coefficient, 4> by_price_type) {
  CorrelationRow row{std::move(company), window, by_price_type, std::nullopt};
  long double sum = 0;
  for (const auto& c : by_price_type) {
    if (!c) return row;
    sum += *c;
  }
  row.avg = static_cast<double>(sum / 4);
  return row;
}

CorrelationRow CorrelationRow::not_available(std::string company, WindowLabel window) {
  return CorrelationRow{std::move(company), window, {}, std::nullopt};
}

CorrelationRow trend_price_row(const CompanySeries& series, WindowLabel window) {
  const auto score = column(series, MatrixColumn::Score);
  std::array<Coefficient, 4> cells{};
  for (auto t : kPriceTypes) {
    cells[static_cast<std::size_t>(t)] = pearson_or_na(score, column(series, matrix_column(t)));
  }
  return CorrelationRow::make(series.company(), window, cells);
}

std::string_view to_string(MatrixColumn c) {
  switch (c) {
    case MatrixColumn::Open: return "Open";
    case MatrixColumn::High: return "High";
    case MatrixColumn::Low: return "Low";
    case MatrixColumn::Close: return "Close";
    case MatrixColumn::Score: return "Score";
    case MatrixColumn::Scale: return "Scale";
  }
  return "?";
}

MatrixColumn matrix_column(PriceType t) {
  switch (t) {
    case PriceType::Open: return MatrixColumn::Open;
    case PriceType::High: return MatrixColumn::High;
    case PriceType::Low: return MatrixColumn::Low;
    case PriceType::Close: return MatrixColumn::Close;
  }
  return MatrixColumn::Close;
}

CorrelationMatrix correlation_matrix(const std::array<std::vector<double>, kMatrixSize>& columns) {
  CorrelationMatrix m;
  for (std::size_t i = 0; i < kMatrixSize; ++i) {
    // pearson(x, x) is 1 up to rounding; pin the diagonal exactly.
    m.cells[i][i] = pearson_or_na(columns[i], columns[i]).has_value() ? Coefficient{1.0}
                                                                       : std::nullopt;
    for (std::size_t j = i + 1; j < kMatrixSize; ++j) {
      m.cells[i][j] = pearson_or_na(columns[i], columns[j]);
      m.cells[j][i] = m.cells[i][j];
    }
  }
  return m;
}

CorrelationMatrix pairwise_matrix(const CompanySeries& series) {
  std::array<std::vector<double>, kMatrixSize> columns;
  for (auto c : kMatrixColumns) columns[static_cast<std::size_t>(c)] = column(series, c);
  return correlation_matrix(columns);
}

ControlCheckResult control_check(const CorrelationMatrix& matrix, double tolerance) {
  if (!std::isfinite(tolerance) || tolerance < 0)
    throw std::invalid_argument("control tolerance must be a non-negative number");

  ControlCheckResult result;
  result.tolerance = tolerance;
  if (!matrix.at(MatrixColumn::Scale, MatrixColumn::Scale)) {
    result.status = ControlCheckResult::Status::Skipped;
    result.pass = true;
    result.note = "scale column is constant; control check skipped";
    return result;
  }

  for (auto t : kPriceTypes) {
    const auto x = matrix_column(t);
    const auto by_scale = matrix.at(MatrixColumn::Scale, x);
    const auto by_score = matrix.at(MatrixColumn::Score, x);
    auto& dev = result.deviations[static_cast<std::size_t>(t)];
    if (by_scale && by_score) dev = std::fabs(*by_scale - *by_score);
    if (dev && (!result.max_deviation || *dev > *result.max_deviation)) result.max_deviation = dev;
  }
  result.pass = !result.max_deviation || *result.max_deviation <= tolerance;
  if (!result.max_deviation) result.note = "no defined deviations";
  return result;
}

}  // namespace eventlens
