// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "eventlens/classify.hpp"
#include "eventlens/correlation.hpp"
#include "eventlens/model.hpp"
#include "eventlens/report.hpp"
#include "eventlens/table.hpp"
#include "fixture_dir.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "published_tables.hpp"
#include "process.hpp"

using namespace eventlens;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kCli = EVENTLENS_CLI_PATH;

/// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// AC1 -----------------------------------------------------------------------

void pearson_oracle(Check& c) {
  std::mt19937_64 rng(1000);
  const auto t0 = Clock::now();
  double worst = 0;
  int compared = 0;
  for (int pair = 0; pair < 1000; ++pair) {
    const std::size_t n = 3 + rng() % 498;
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = test::uniform(rng, -1e6, 1e6);
    for (auto& v : y) v = test::uniform(rng, -1e6, 1e6);
    // Every third pair is correlated by construction.
    if (pair % 3 == 0)
      for (std::size_t i = 0; i < n; ++i) y[i] = 0.7 * x[i] + 0.3 * y[i];
    const double got = pearson(x, y);
    const double want = test::oracle_pearson(x, y);
    worst = std::max(worst, std::fabs(got - want));
    ++compared;
    c.expect(std::fabs(got - want) <= 1e-12,
             "pair " + std::to_string(pair) + " n=" + std::to_string(n) + " diff " + fmt("%.3g", got - want));
  }
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 5.0, "runtime " + fmt("%.3f", elapsed) + " s");
  c.detail = std::to_string(compared) + " pairs, max |diff| " + fmt("%.2g", worst) + ", " +
             fmt("%.3f", elapsed) + " s";
}

// AC2 -----------------------------------------------------------------------

// Published cells are themselves rounded, so a recomputed mean can land on
// an exact 5e-5 tie; such cells are accepted within half a unit.
bool reproduces(double value, const std::string& published, std::vector<std::string>& ties) {
  if (format_fixed4(value) == published) return true;
  if (std::fabs(value - std::stod(published)) <= 0.5e-4 + 1e-12) {
    ties.push_back(fmt("%.6f", value) + " vs " + published);
    return true;
  }
  return false;
}

CorrelationRow published_row(const test::PublishedRow& p, WindowLabel w) {
  if (!p.cells) return CorrelationRow::not_available(p.company, w);
  const auto& v = *p.cells;  // printed order Open, Close, High, Low
  return CorrelationRow::make(p.company, w, {std::stod(v[0]), std::stod(v[2]), std::stod(v[3]), std::stod(v[1])});
}

void table_arithmetic(Check& c) {
  int cells = 0;
  std::vector<std::string> ties;
  for (const auto& t : test::published_tables()) {
    std::vector<CorrelationRow> rows;
    for (const auto& p : t.rows) {
      rows.push_back(published_row(p, t.window));
      if (!p.cells) continue;
      ++cells;
      c.expect(reproduces(*rows.back().avg, (*p.cells)[4], ties),
               p.company + " " + std::string(display_name(t.window)) + " Avg " + format_cell(rows.back().avg) +
                   " vs " + (*p.cells)[4]);
    }
    const auto table = aggregate_table(rows);
    const std::array<Coefficient, 5> avg{table.average_row.at(PriceType::Open), table.average_row.at(PriceType::Close),
                                         table.average_row.at(PriceType::High), table.average_row.at(PriceType::Low),
                                         table.average_row.avg};
    for (std::size_t i = 0; i < 5; ++i) {
      ++cells;
      c.expect(avg[i].has_value() && reproduces(*avg[i], t.average[i], ties),
               std::string(display_name(t.window)) + " Average col " + std::to_string(i) + " " + format_cell(avg[i]) +
                   " vs " + t.average[i]);
    }
  }
  c.detail = std::to_string(cells) + " derived cells, " + std::to_string(ties.size()) + " at a rounding tie";
  for (const auto& t : ties) c.detail += "; " + t;
}

// AC3 -----------------------------------------------------------------------

char color_letter(Color col) { return col == Color::Green ? 'G' : col == Color::Red ? 'R' : 'O'; }

void classification(Check& c) {
  int cells = 0;
  for (const auto& t : test::published_tables()) {
    for (const auto& p : t.rows) {
      if (!p.cells) continue;
      for (std::size_t i = 0; i < 5; ++i, ++cells)
        c.expect(color_letter(classify(std::stod((*p.cells)[i])).color) == p.colors[i],
                 p.company + " " + (*p.cells)[i]);
    }
    for (std::size_t i = 0; i < 5; ++i, ++cells)
      c.expect(color_letter(classify(std::stod(t.average[i])).color) == t.average_colors[i],
               std::string("Average ") + t.average[i]);
  }
  const auto& full = test::published_tables()[0].rows;
  for (const char* cell : *full[0].cells) c.expect(classify(std::stod(cell)).band == Band::Strong, "Moderna strong");

  c.expect(classify(0.1).band == Band::Negligible, "0.1 negligible");
  c.expect(classify(std::nextafter(0.1, 1.0)).band == Band::Weak, "above 0.1 weak");
  c.expect(classify(0.3).band == Band::Moderate && classify(0.3).color == Color::Orange, "0.3 moderate orange");
  c.expect(classify(std::nextafter(0.3, 1.0)).color == Color::Green, "above 0.3 green");
  c.expect(classify(-0.3).color == Color::Orange && classify(std::nextafter(-0.3, -1.0)).color == Color::Red,
           "-0.3 boundary");
  c.expect(classify(0.6).band == Band::Strong && classify(std::nextafter(0.6, 0.0)).band == Band::Moderate,
           "0.6 boundary");
  c.detail = std::to_string(cells) + " published cells";
}

// AC4 -----------------------------------------------------------------------

void join_split(Check& c) {
  std::mt19937_64 rng(404);
  const Date base{2020, 1, 1};
  for (int f = 0; f < 200; ++f) {
    const int span = 5 + int(rng() % 400);
    std::vector<PriceBar> prices;
    std::vector<TrendPoint> trends;
    std::vector<std::pair<Date, int>> pd, td;
    for (int i = 0; i < span; ++i) {
      const Date d = base.add_days(i);
      if (rng() % 7 < 5) {
        const double p = test::uniform(rng, 1, 500);
        prices.emplace_back(d, p, p * 1.01, p * 0.99, p);
        pd.emplace_back(d, i);
      }
      if (rng() % 10 < 9) {
        trends.emplace_back(d, double(rng() % 101));
        td.emplace_back(d, i);
      }
    }
    std::shuffle(prices.begin(), prices.end(), rng);
    std::shuffle(trends.begin(), trends.end(), rng);

    const auto merged = merge_on_dates(prices, trends);
    std::vector<Date> dates;
    for (const auto& r : merged) dates.push_back(r.date());
    const auto expect = test::oracle_intersection(pd, td);
    c.expect(dates == expect, "fixture " + std::to_string(f) + ": merged dates differ from intersection");

    const CompanySeries series("F", "F", merged);
    const Date event = base.add_days(int(rng() % (span + 20)) - 10);
    const auto [pre, post] = split_by_event(series, event);
    bool ok = pre.size() + post.size() == series.size();
    for (const auto& r : pre.records()) ok = ok && r.date() < event;
    for (const auto& r : post.records()) ok = ok && r.date() >= event;
    std::vector<Date> joined;
    for (const auto& r : pre.records()) joined.push_back(r.date());
    for (const auto& r : post.records()) joined.push_back(r.date());
    c.expect(ok && joined == dates, "fixture " + std::to_string(f) + ": split is not a partition");
  }
  c.detail = "200 fixtures";
}

// AC5 -----------------------------------------------------------------------

/// Overwrites the Score column of a trend CSV with a seeded permutation.
void shuffle_scores(const std::filesystem::path& csv, std::uint64_t seed) {
  std::istringstream in(test::slurp(csv));
  std::string header, line;
  std::getline(in, header);
  std::vector<std::array<std::string, 3>> rows;
  while (std::getline(in, line)) {
    const auto a = line.find(','), b = line.find(',', a + 1);
    rows.push_back({line.substr(0, a), line.substr(a + 1, b - a - 1), line.substr(b + 1)});
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = rows.size(); i > 1; --i) std::swap(rows[i - 1][1], rows[rng() % i][1]);
  std::string out = header + "\n";
  for (const auto& r : rows) out += r[0] + "," + r[1] + "," + r[2] + "\n";
  test::spit(csv, out);
}

void control_check_criterion(Check& c) {
  std::mt19937_64 rng(505);
  double worst = 0;
  for (double k : {0.5, 2.0, 3.7, 41.0}) {
    std::vector<MergedRecord> recs;
    Date d{2020, 3, 1};
    for (int i = 0; i < 120; ++i, d = d.add_days(1)) {
      const double score = double(1 + rng() % 100);
      const double close = 20 + 0.8 * score + test::uniform(rng, 0, 15);
      recs.emplace_back(d, close - 0.3, close + 1, close - 1, close, score, k * score);
    }
    const auto result = control_check(pairwise_matrix(CompanySeries("K", "K", recs)), kDefaultControlTolerance);
    c.expect(result.status == ControlCheckResult::Status::Checked && result.pass, "k=" + fmt("%g", k) + " failed");
    worst = std::max(worst, *result.max_deviation);
  }
  c.expect(format_fixed4(worst) == "0.0000" && worst <= kPearsonSlack, "Scale = k*Score deviation " + fmt("%.3g", worst));

  test::TempDir dir;
  test::copy_fixture(dir.path() / "in");
  shuffle_scores(dir.path() / "in" / "trends" / "MRNA.csv", 5);
  const auto config = (dir.path() / "in" / "config.json").string();
  const auto out = (dir.path() / "out").string();
  const auto ingest = test::run_process(kCli, {"ingest", "--offline", "--config", config, "--out", out});
  c.expect(ingest.exit_code == 0, "ingest exit " + std::to_string(ingest.exit_code));
  const auto analyze = test::run_process(kCli, {"analyze", "--config", config, "--out", out});
  c.expect(analyze.exit_code == 2, "analyze exit " + std::to_string(analyze.exit_code) + ", expected 2");
  const auto summary = test::slurp(dir.path() / "out" / "control_summary.csv");
  c.expect(summary.find("Moderna,Full,CHECKED,") != std::string::npos &&
               summary.find(",FAIL\n") != std::string::npos,
           "control_summary does not flag Moderna");
  c.detail = "max deviation for Scale = k*Score " + fmt("%.1g", worst) + "; shuffled Score -> analyze exit " +
             std::to_string(analyze.exit_code);
}

// AC6 -----------------------------------------------------------------------

test::TempDir g_runs;

std::filesystem::path run_dir(int i) { return g_runs.path() / ("run" + std::to_string(i)); }

void determinism(Check& c) {
  const auto config = (test::fixture_dir() / "config.json").string();
  double slowest = 0;
  for (int i = 0; i < 2; ++i) {
    const auto t0 = Clock::now();
    const auto r = test::run_process(kCli, {"run", "--offline", "--config", config, "--out", run_dir(i).string()});
    slowest = std::max(slowest, seconds_since(t0));
    c.expect(r.exit_code == 0, "run " + std::to_string(i) + " exit " + std::to_string(r.exit_code) + "\n" + r.output);
  }
  const auto a = test::tree(run_dir(0)), b = test::tree(run_dir(1));
  c.expect(!a.empty() && a == b, "output trees differ");
  std::size_t snapshots = 0, svgs = 0, reports = 0;
  for (const auto& [name, _] : a) {
    snapshots += name.ends_with("_trend.csv") || name.ends_with("_value.csv") || name.ends_with("_merged.csv");
    svgs += name.ends_with(".svg");
    reports += name.starts_with("report_");
  }
  c.expect(snapshots == 15 && reports == 6 && svgs == 13,
           "unexpected tree: " + std::to_string(snapshots) + " snapshots, " + std::to_string(reports) +
               " reports, " + std::to_string(svgs) + " svgs");
  c.expect(slowest < 10.0, "run took " + fmt("%.2f", slowest) + " s");
  c.detail = std::to_string(a.size()) + " files identical, slowest run " + fmt("%.2f", slowest) + " s";
}

// AC7 -----------------------------------------------------------------------

void degenerate(Check& c) {
  std::vector<MergedRecord> recs;
  Date d{2021, 1, 4};
  for (int i = 0; i < 30; ++i, d = d.add_days(1)) {
    const double open = 10 + i;
    recs.emplace_back(d, open, 50, 5, 40, double(i * 3 % 101), 1.0);  // High/Low/Close constant
  }
  const auto row = trend_price_row(CompanySeries("C", "C", recs), WindowLabel::Full);
  c.expect(row.at(PriceType::Open).has_value(), "Open should be defined");
  c.expect(!row.at(PriceType::Close) && !row.at(PriceType::High) && !row.at(PriceType::Low) && !row.avg,
           "constant price column not N/A");

  const auto one = trend_price_row(CompanySeries("C", "C", {recs.front()}), WindowLabel::PreRollout);
  bool all_na = !one.avg;
  for (auto t : kReportPriceOrder) all_na = all_na && !one.at(t);
  c.expect(all_na, "1-row window not N/A");

  const auto empty = trend_price_row(CompanySeries("C", "C", {}), WindowLabel::PostRollout);
  c.expect(!empty.avg, "empty window not N/A");

  for (const char* token : {"pre_rollout", "post_rollout"}) {
    const auto md = test::slurp(run_dir(0) / (std::string("report_") + token + ".md"));
    const auto csv = test::slurp(run_dir(0) / (std::string("report_") + token + ".csv"));
    c.expect(md.find("| NovaVax | N/A | N/A | N/A | N/A | N/A") != std::string::npos,
             std::string(token) + ".md lacks the NovaVax N/A row");
    c.expect(csv.find("NovaVax,N/A,N/A,N/A,N/A,N/A\n") != std::string::npos,
             std::string(token) + ".csv lacks the NovaVax N/A row");
  }
  c.detail = "constant column, 1-row and empty windows, missing event";
}

// AC8 -----------------------------------------------------------------------

std::string group(const std::string& svg, const std::string& id) {
  const auto start = svg.find("<g id=\"" + id + "\"");
  if (start == std::string::npos) return {};
  return svg.substr(start, svg.find("</g>", start) - start);
}

void fixed_axes(Check& c) {
  int companies = 0;
  for (const char* ticker : {"MRNA", "PFE", "AZN", "JNJ"}) {
    std::vector<std::string> svgs;
    for (const char* token : {"full", "pre_rollout", "post_rollout"})
      svgs.push_back(test::slurp(run_dir(0) / (std::string(ticker) + "_" + token + ".svg")));
    for (const char* id : {"axes", "tick-labels"}) {
      const auto g = group(svgs[0], id);
      c.expect(!g.empty(), std::string(ticker) + " has no " + id + " group");
      c.expect(g == group(svgs[1], id) && g == group(svgs[2], id), std::string(ticker) + " " + id + " differ");
    }
    ++companies;
  }
  c.expect(!group(test::slurp(run_dir(0) / "NVAX_full.svg"), "axes").empty(), "NVAX full plot missing axes");
  c.detail = std::to_string(companies) + " companies with three windows";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"AC1 Pearson matches definitional oracle", pearson_oracle},
      {"AC2 Published table arithmetic reproduced", table_arithmetic},
      {"AC3 Published cells classify to expected colors", classification},
      {"AC4 Join and split properties", join_split},
      {"AC5 Control check", control_check_criterion},
      {"AC6 Deterministic runs on the bundled fixture", determinism},
      {"AC7 Degenerate inputs yield N/A", degenerate},
      {"AC8 Fixed axes across windows", fixed_axes},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(c.failures.size(), 10); ++i)
      std::cout << "       " << c.failures[i] << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
