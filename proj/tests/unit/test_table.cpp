#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "eventlens/error.hpp"
#include "eventlens/report.hpp"
#include "eventlens/table.hpp"
#include "published_tables.hpp"

using namespace eventlens;

namespace {

CorrelationRow row_from_published(const test::PublishedRow& p, WindowLabel w) {
  if (!p.cells) return CorrelationRow::not_available(p.company, w);
  const auto& c = *p.cells;
  // Printed order is Open, Close, High, Low.
  return CorrelationRow::make(p.company, w,
                              {std::stod(c[0]), std::stod(c[2]), std::stod(c[3]), std::stod(c[1])});
}

std::vector<CorrelationRow> rows_of(const test::PublishedTable& t) {
  std::vector<CorrelationRow> rows;
  for (const auto& p : t.rows) rows.push_back(row_from_published(p, t.window));
  return rows;
}

}  // namespace

TEST_SUITE("table") {
  TEST_CASE("post-rollout Close column excludes the N/A row") {
    const auto& t = test::published_tables()[2];
    const auto table = aggregate_table(rows_of(t));
    // (0.1134 + 0.4133 - 0.2519 - 0.5797) / 4 = -0.076225
    CHECK(*table.average_row.at(PriceType::Close) == doctest::Approx(-0.076225).epsilon(1e-12));
    CHECK(format_cell(table.average_row.at(PriceType::Close)) == "-0.0762");
  }

  TEST_CASE("complete time frame Open column") {
    const auto table = aggregate_table(rows_of(test::published_tables()[0]));
    CHECK(format_cell(table.average_row.at(PriceType::Open)) == "0.3957");
    CHECK(format_cell(table.average_row.avg) == "0.3969");
  }

  TEST_CASE("single row averages to itself") {
    const auto row = CorrelationRow::make("A", WindowLabel::Full, {0.1, 0.2, 0.3, 0.4});
    const auto table = aggregate_table(std::vector{row});
    CHECK(table.average_row.coefficients == row.coefficients);
    CHECK(table.average_row.avg == row.avg);
    CHECK(table.average_row.company == "Average");
  }

  TEST_CASE("k identical rows average to that row") {
    const auto row = CorrelationRow::make("A", WindowLabel::PreRollout, {0.61, -0.2, 0.33, 0.05});
    for (std::size_t k = 1; k <= 7; ++k) {
      const auto table = aggregate_table(std::vector(k, row));
      for (std::size_t i = 0; i < 4; ++i)
        CHECK(*table.average_row.coefficients[i] == doctest::Approx(*row.coefficients[i]).epsilon(1e-15));
      CHECK(table.window == WindowLabel::PreRollout);
    }
  }

  TEST_CASE("all-N/A column stays N/A") {
    const auto table = aggregate_table(std::vector{CorrelationRow::not_available("N", WindowLabel::Full)});
    CHECK_FALSE(table.average_row.avg);
    CHECK_FALSE(table.average_row.at(PriceType::Open));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(aggregate_table(std::vector<CorrelationRow>{}), EmptyInput);
    CHECK_THROWS_AS(aggregate_table(std::vector{CorrelationRow::not_available("a", WindowLabel::Full),
                                                CorrelationRow::not_available("b", WindowLabel::PreRollout)}),
                    std::invalid_argument);
  }
}
