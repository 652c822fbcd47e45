#include <cmath>
#include <cstdio>

#include "eventlens/classify.hpp"
#include "eventlens/report.hpp"

namespace eventlens {

std::string format_fixed4(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";

  // glibc prints the exact binary expansion; 40 places is enough to decide
  // every tie for magnitudes where the fourth decimal is meaningful.
  char buf[400];
  std::snprintf(buf, sizeof buf, "%.40f", std::fabs(v));
  std::string digits(buf);
  const auto dot = digits.find('.');
  std::string kept = digits.substr(0, dot) + digits.substr(dot + 1, 4);
  const bool round_up = digits[dot + 5] >= '5';

  if (round_up) {
    int i = static_cast<int>(kept.size()) - 1;
    for (; i >= 0; --i) {
      if (kept[i] == '9') {
        kept[i] = '0';
      } else {
        ++kept[i];
        break;
      }
    }
    if (i < 0) kept.insert(kept.begin(), '1');
  }

  std::string out = kept.substr(0, kept.size() - 4) + "." + kept.substr(kept.size() - 4);
  const bool zero = kept.find_first_not_of('0') == std::string::npos;
  if (v < 0 && !zero) out.insert(out.begin(), '-');
  return out;
}

std::string format_cell(const Coefficient& c) { return c ? format_fixed4(*c) : "N/A"; }

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string md_cell(const Coefficient& c) {
  if (!c) return "N/A";
  return format_fixed4(*c) + " " + std::string(color_token(classify(*c).color));
}

std::array<Coefficient, 5> report_cells(const CorrelationRow& row) {
  return {row.at(PriceType::Open), row.at(PriceType::Close), row.at(PriceType::High),
          row.at(PriceType::Low), row.avg};
}

void markdown_row(std::string& out, const CorrelationRow& row) {
  out += "| " + md_escape(row.company);
  for (const auto& c : report_cells(row)) out += " | " + md_cell(c);
  out += " | " + (row.avg ? label(classify(*row.avg)) : std::string("N/A")) + " |\n";
}

void csv_row(std::string& out, const CorrelationRow& row) {
  out += csv_escape(row.company);
  for (const auto& c : report_cells(row)) out += "," + format_cell(c);
  out += '\n';
}

}  // namespace

std::string render_table(const CorrelationReportTable& table, TableFormat format) {
  std::string out;
  if (format == TableFormat::Markdown) {
    out += "# Trend correlation: " + std::string(display_name(table.window)) + "\n\n";
    out += "| Company | Open | Close | High | Low | Avg. | Band |\n";
    out += "|---|---|---|---|---|---|---|\n";
    for (const auto& r : table.rows) markdown_row(out, r);
    markdown_row(out, table.average_row);
    out += "\nColor: [G] r > 0.3, [O] -0.3 <= r <= 0.3, [R] r < -0.3.\n";
  } else {
    out += "Company,Open,Close,High,Low,Avg\n";
    for (const auto& r : table.rows) csv_row(out, r);
    csv_row(out, table.average_row);
  }
  return out;
}

std::string render_matrix_csv(const CorrelationMatrix& matrix) {
  std::string out = "Column";
  for (auto c : kMatrixColumns) out += "," + std::string(to_string(c));
  out += '\n';
  for (auto a : kMatrixColumns) {
    out += to_string(a);
    for (auto b : kMatrixColumns) {
      const auto v = matrix.at(a, b);
      char buf[32] = "N/A";
      if (v) std::snprintf(buf, sizeof buf, "%.6f", *v == 0.0 ? 0.0 : *v);
      out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace eventlens
