#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eventlens/error.hpp"
#include "eventlens/model.hpp"

namespace eventlens {

/// A correlation coefficient, or nullopt when undefined (rendered as N/A).
using Coefficient = std::optional<double>;

class CorrelationError : public Error {
 public:
  enum class Kind { LengthMismatch, TooFewPoints, ZeroVariance };
  CorrelationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Largest pre-clamp excursion beyond [-1, 1] attributed to rounding.
inline constexpr double kPearsonSlack = 1e-12;

/// Pearson product-moment coefficient, two-pass with long double
/// accumulation, clamped to [-1, 1]. Symmetric in its arguments bit for bit.
/// Throws CorrelationError (LengthMismatch, TooFewPoints for n < 2,
/// ZeroVariance when either input is constant).
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Unclamped value of the same computation, for auditing rounding excess.
double pearson_unclamped(std::span<const double> xs, std::span<const double> ys);

/// As pearson(), but TooFewPoints and ZeroVariance yield N/A.
/// LengthMismatch still throws.
Coefficient pearson_or_na(std::span<const double> xs, std::span<const double> ys);

/// Trend-score vs. price coefficients for one company and window.
struct CorrelationRow {
  std::string company;
  WindowLabel window = WindowLabel::Full;
  std::array<Coefficient, 4> coefficients{};  // indexed by PriceType
  /// Mean of the four coefficients, N/A if any is N/A. For the aggregate
  /// "Average" row this is the mean of the Avg column instead.
  Coefficient avg;

  /// Builds a row and derives `avg`.
  static CorrelationRow make(std::string company, WindowLabel window,
                             std::array<Coefficient, 4> by_price_type);
  static CorrelationRow not_available(std::string company, WindowLabel window);

  [[nodiscard]] Coefficient at(PriceType t) const {
    return coefficients[static_cast<std::size_t>(t)];
  }
};

/// Pearson(score, price) per price type over the whole series; degenerate
/// cells become N/A.
CorrelationRow trend_price_row(const CompanySeries& series, WindowLabel window);

enum class MatrixColumn { Open, High, Low, Close, Score, Scale };
inline constexpr std::size_t kMatrixSize = 6;
inline constexpr std::array<MatrixColumn, kMatrixSize> kMatrixColumns{
    MatrixColumn::Open,  MatrixColumn::High,  MatrixColumn::Low,
    MatrixColumn::Close, MatrixColumn::Score, MatrixColumn::Scale};

std::string_view to_string(MatrixColumn c);
MatrixColumn matrix_column(PriceType t);

struct CorrelationMatrix {
  std::array<std::array<Coefficient, kMatrixSize>, kMatrixSize> cells{};

  [[nodiscard]] Coefficient at(MatrixColumn a, MatrixColumn b) const {
    return cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
};

/// All-pairs Pearson over six equally long columns. The diagonal is 1.0 for
/// non-constant columns and N/A otherwise.
CorrelationMatrix correlation_matrix(const std::array<std::vector<double>, kMatrixSize>& columns);

/// correlation_matrix over a series' Open, High, Low, Close, Score, Scale.
CorrelationMatrix pairwise_matrix(const CompanySeries& series);

inline constexpr double kDefaultControlTolerance = 0.05;

struct ControlCheckResult {
  enum class Status { Checked, Skipped };
  Status status = Status::Checked;
  std::array<Coefficient, 4> deviations{};  // |c(scale,x) - c(score,x)| by PriceType
  Coefficient max_deviation;
  bool pass = true;
  double tolerance = kDefaultControlTolerance;
  std::string note;
};

/// Compares the Scale column's correlation with each price against the Score
/// column's. Skipped (and passing) when Scale is constant. Throws
/// std::invalid_argument for a negative or non-finite tolerance.
ControlCheckResult control_check(const CorrelationMatrix& matrix,
                                 double tolerance = kDefaultControlTolerance);

}  // namespace eventlens
