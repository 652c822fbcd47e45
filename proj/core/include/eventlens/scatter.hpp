#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eventlens/model.hpp"

namespace eventlens {

/// Fixed plot axes: x is the trend score [0, 100]; y runs from 0 to the
/// smallest multiple of 25 covering the highest close of the full window.
/// One AxisSpec is shared by all of a company's window plots.
struct AxisSpec {
  double x_min = 0;
  double x_max = 100;
  double y_min = 0;
  double y_max = 25;

  [[nodiscard]] std::vector<double> x_ticks() const;  // 0, 25, 50, 75, 100
  /// Multiples of 25 from 0 to y_max, thinned to at most 11 ticks.
  [[nodiscard]] std::vector<double> y_ticks() const;

  friend bool operator==(const AxisSpec&, const AxisSpec&) = default;
};

inline constexpr double kPriceTickUnit = 25.0;

/// Axis for a company, computed from its full-window series.
AxisSpec axis_for(const CompanySeries& full_window);

struct ScatterPlot {
  std::string company;
  WindowLabel window = WindowLabel::Full;
  std::vector<std::pair<double, double>> points;  // (score, close)
  AxisSpec axes;
};

/// One point per record. Throws std::invalid_argument if a close lies above
/// `axes.y_max` (the axis was not derived from a covering window).
ScatterPlot make_scatter(const CompanySeries& window_series, WindowLabel window,
                         const AxisSpec& axes);

/// SVG 1.1 document titled with the company and window display name joined
/// by U+2014. Axis lines and ticks are emitted in `<g id="axes">` and
/// `<g id="tick-labels">`, which depend only on the AxisSpec. Byte-identical
/// for identical input.
std::string render_scatter(const ScatterPlot& plot);

}  // namespace eventlens
