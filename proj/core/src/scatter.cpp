#include "eventlens/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace eventlens {

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 610, kTop = 50, kBottom = 420;
constexpr double kTickLength = 5;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0f", v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double to_px(double x, const AxisSpec& a) {
  return kLeft + (x - a.x_min) / (a.x_max - a.x_min) * (kRight - kLeft);
}

double to_py(double y, const AxisSpec& a) {
  return kBottom - (y - a.y_min) / (a.y_max - a.y_min) * (kBottom - kTop);
}

}  // namespace

std::vector<double> AxisSpec::x_ticks() const { return {0, 25, 50, 75, 100}; }

std::vector<double> AxisSpec::y_ticks() const {
  const double units = std::round(y_max / kPriceTickUnit);
  // Step through 1, 2, 5, 10, 20, 50, ... units of 25.
  double step = 1;
  for (int i = 0; units / step > 10; ++i) step *= (i % 3 == 1) ? 2.5 : 2;
  std::vector<double> ticks;
  for (double k = 0; k <= units + 1e-9; k += step) ticks.push_back(k * kPriceTickUnit);
  return ticks;
}

AxisSpec axis_for(const CompanySeries& full_window) {
  AxisSpec axes;
  double max_close = 0;
  for (const auto& r : full_window.records()) max_close = std::max(max_close, r.close());
  axes.y_max = std::max(kPriceTickUnit, std::ceil(max_close / kPriceTickUnit) * kPriceTickUnit);
  return axes;
}

ScatterPlot make_scatter(const CompanySeries& window_series, WindowLabel window,
                         const AxisSpec& axes) {
  ScatterPlot plot{window_series.company(), window, {}, axes};
  plot.points.reserve(window_series.size());
  for (const auto& r : window_series.records()) {
    if (r.close() > axes.y_max) {
      throw std::invalid_argument(window_series.company() + ": close " + std::to_string(r.close()) +
                                  " above axis maximum " + std::to_string(axes.y_max));
    }
    plot.points.emplace_back(r.score(), r.close());
  }
  return plot;
}

std::string render_scatter(const ScatterPlot& plot) {
  const AxisSpec& a = plot.axes;
  const std::string title = xml_escape(plot.company) + " — " +
                            xml_escape(std::string(display_name(plot.window)));
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"480\" "
       "viewBox=\"0 0 640 480\">\n";
  s += "<title>" + title + "</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
       "\" fill=\"#ffffff\"/>\n";
  s += "<text x=\"320.00\" y=\"28.00\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"16\">" +
       title + "</text>\n";

  s += "<g id=\"axes\" stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n";
  s += "<path d=\"M" + num(kLeft) + "," + num(kBottom) + " H" + num(kRight) + " M" + num(kLeft) +
       "," + num(kBottom) + " V" + num(kTop) + "\"/>\n";
  for (double x : a.x_ticks()) {
    const double px = to_px(x, a);
    s += "<line x1=\"" + num(px) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(px) + "\" y2=\"" +
         num(kBottom + kTickLength) + "\"/>\n";
  }
  for (double y : a.y_ticks()) {
    const double py = to_py(y, a);
    s += "<line x1=\"" + num(kLeft - kTickLength) + "\" y1=\"" + num(py) + "\" x2=\"" + num(kLeft) +
         "\" y2=\"" + num(py) + "\"/>\n";
  }
  s += "</g>\n";

  s += "<g id=\"tick-labels\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n";
  for (double x : a.x_ticks()) {
    s += "<text x=\"" + num(to_px(x, a)) + "\" y=\"" + num(kBottom + 18) +
         "\" text-anchor=\"middle\">" + tick_label(x) + "</text>\n";
  }
  for (double y : a.y_ticks()) {
    s += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(to_py(y, a) + 4) +
         "\" text-anchor=\"end\">" + tick_label(y) + "</text>\n";
  }
  s += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" + num(kHeight - 20) +
       "\" text-anchor=\"middle\">Trend score</text>\n";
  s += "<text x=\"18.00\" y=\"" + num((kTop + kBottom) / 2) +
       "\" text-anchor=\"middle\" transform=\"rotate(-90 18.00 " + num((kTop + kBottom) / 2) +
       ")\">Close (USD)</text>\n";
  s += "</g>\n";

  s += "<g id=\"points\" fill=\"#1f77b4\" fill-opacity=\"0.6\" stroke=\"none\">\n";
  for (const auto& [score, close] : plot.points) {
    s += "<circle cx=\"" + num(to_px(score, a)) + "\" cy=\"" + num(to_py(close, a)) +
         "\" r=\"3\"/>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace eventlens
