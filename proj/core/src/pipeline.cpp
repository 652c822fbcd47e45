#include "eventlens/pipeline.hpp"

#include <cstdlib>
#include <map>

#include <json.hpp>

#include "eventlens/classify.hpp"
#include "eventlens/correlation.hpp"
#include "eventlens/error.hpp"
#include "eventlens/ingest.hpp"
#include "eventlens/report.hpp"
#include "eventlens/scatter.hpp"
#include "eventlens/snapshot.hpp"
#include "eventlens/table.hpp"
#include "eventlens/verify.hpp"

namespace eventlens {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

template <class T>
std::vector<T> within(std::vector<T> rows, const AnalysisWindow& range) {
  std::erase_if(rows, [&](const T& r) { return !range.contains(r.date()); });
  return rows;
}

std::vector<PriceBar> load_prices(const SourceConfig& source, const CommandOptions& options,
                                  const RunConfig& config, Logger& log) {
  auto from_file = [&](const std::string& path) {
    const auto parsed = parse_price_csv(read_file(path));
    for (const auto& d : parsed.diagnostics)
      log.info(source.company + ": " + path + " line " + std::to_string(d.line) + " skipped: " +
               d.reason);
    return parsed.rows;
  };

  if (const auto* local = std::get_if<LocalPriceFile>(&source.price_source))
    return from_file(local->path);

  const auto& remote = std::get<RemotePriceEndpoint>(source.price_source);
  if (options.offline) {
    if (!remote.fallback_path)
      throw NetworkError(source.company + ": network disabled (--offline) and no fallback_file");
    log.warn(source.company + ": offline, using " + *remote.fallback_path);
    return from_file(*remote.fallback_path);
  }
  try {
    FetchOptions fetch{config.user_agent, std::chrono::seconds{30}, 1, options.transport};
    auto chart = fetch_price_history(source, fetch);
    for (const auto& s : chart.skipped) log.info(source.company + ": skipped " + s);
    return std::move(chart.bars);
  } catch (const Error& e) {
    const bool fetch_failure = dynamic_cast<const NetworkError*>(&e) != nullptr ||
                               dynamic_cast<const UnexpectedPayload*>(&e) != nullptr;
    if (!fetch_failure || !remote.fallback_path) throw;
    log.warn(source.company + ": fetch failed (" + e.what() + "), falling back to " +
             *remote.fallback_path);
    return from_file(*remote.fallback_path);
  }
}

json verification_json(const SourceConfig& source, const VerificationReport& report) {
  json checked = json::array();
  for (const auto& d : report.checked) checked.push_back(d.iso());
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"date", m.date.iso()},
                          {"field", m.field},
                          {"snapshot", m.snapshot ? json(*m.snapshot) : json()},
                          {"source", m.source ? json(*m.source) : json()}});
  }
  return {{"company", source.company},     {"ticker", source.ticker},
          {"seed", report.seed},           {"sample_size", report.requested},
          {"checked", std::move(checked)}, {"mismatches", std::move(mismatches)},
          {"ok", report.ok()}};
}

void ingest_company(const SourceConfig& source, const RunConfig& config,
                    const CommandOptions& options, const fs::path& out, std::uint64_t seed,
                    Logger& log) {
  const auto prices = within(load_prices(source, options, config, log), source.date_range);
  const auto trend_parse = parse_trend_csv(read_file(source.trend_source));
  const auto trends = within(trend_parse.rows, source.date_range);
  const auto merged = merge_on_dates(prices, trends);

  const auto paths = write_snapshots(out, source.ticker, prices, trends, merged);
  log.info(source.company + ": " + std::to_string(prices.size()) + " price rows, " +
           std::to_string(trends.size()) + " trend rows, " + std::to_string(merged.size()) +
           " merged -> " + paths.merged.string());

  const auto snapshot =
      parse_merged_csv(read_file(paths.merged.string()), source.company, source.ticker);
  const auto report =
      verify_against_source(snapshot, prices, trends, config.verify_sample_size, seed);
  write_file(out / (source.ticker + "_verification.json"),
             verification_json(source, report).dump(2) + "\n");
  if (!report.ok()) {
    throw Error(source.company + ": verification found " +
                std::to_string(report.mismatches.size()) + " mismatching field(s)");
  }
  log.info(source.company + ": verified " + std::to_string(report.checked.size()) +
           " sampled rows, 0 mismatches");
}

json coefficient_json(const Coefficient& c) { return c ? json(*c) : json(); }

json row_json(const CorrelationRow& row) {
  json cells = json::object();
  for (auto t : kReportPriceOrder) cells[std::string(to_string(t))] = coefficient_json(row.at(t));
  json out{{"company", row.company}, {"coefficients", std::move(cells)},
           {"avg", coefficient_json(row.avg)}};
  if (row.avg) {
    const auto band = classify(*row.avg);
    out["band"] = label(band);
    out["color"] = std::string(to_string(band.color));
  }
  return out;
}

struct ControlEntry {
  std::string company;
  WindowLabel window;
  ControlCheckResult result;
};

std::string control_summary_csv(const std::vector<ControlEntry>& entries) {
  std::string out = "Company,Window,Status,MaxDeviation,Tolerance,Pass\n";
  for (const auto& e : entries) {
    out += e.company + "," + std::string(display_name(e.window)) + "," +
           (e.result.status == ControlCheckResult::Status::Skipped ? "SKIPPED" : "CHECKED") + "," +
           format_cell(e.result.max_deviation) + "," + format_fixed4(e.result.tolerance) + "," +
           (e.result.pass ? "PASS" : "FAIL") + "\n";
  }
  return out;
}

}  // namespace

fs::path resolve_output_dir(const RunConfig& config, const CommandOptions& options) {
  if (options.out) return *options.out;
  if (!config.output_dir.empty()) return config.output_dir;
  if (const char* env = std::getenv("EVENTLENS_OUT"); env && *env) return env;
  throw ConfigError("no output directory: pass --out, set output_dir, or set EVENTLENS_OUT");
}

int cmd_ingest(const RunConfig& config, const CommandOptions& options, Logger& log) {
  fs::path out;
  try {
    if (config.companies.empty()) throw EmptyInput("config lists no companies");
    out = resolve_output_dir(config, options);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw IoError(out.string(), ec.message());
  } catch (const Error& e) {
    log.error(e.what());
    return kExitInputError;
  }

  const std::uint64_t seed = options.seed.value_or(config.seed);
  int failures = 0;
  for (const auto& source : config.companies) {
    try {
      ingest_company(source, config, options, out, seed, log);
    } catch (const std::exception& e) {
      ++failures;
      const std::string what = e.what();
      log.error(what.starts_with(source.company) ? what : source.company + ": " + what);
    }
  }
  return failures ? kExitInputError : kExitSuccess;
}

int cmd_analyze(const RunConfig& config, const CommandOptions& options, Logger& log) {
  fs::path out;
  std::vector<CompanySeries> series;
  try {
    if (config.companies.empty()) throw EmptyInput("config lists no companies");
    out = resolve_output_dir(config, options);
    for (const auto& source : config.companies) {
      const auto path = snapshot_paths(out, source.ticker).merged;
      if (!fs::exists(path)) throw MissingSnapshot(source.company, path.string());
      series.push_back(restrict_to_window(
          parse_merged_csv(read_file(path.string()), source.company, source.ticker),
          config.window));
    }
  } catch (const std::exception& e) {
    log.error(e.what());
    return kExitInputError;
  }

  std::map<WindowLabel, std::vector<CorrelationRow>> rows;
  std::vector<ControlEntry> controls;

  try {
    for (const auto& full : series) {
      const auto event = config.events.lookup(full.company());
      std::vector<std::pair<WindowLabel, CompanySeries>> windows{{WindowLabel::Full, full}};
      if (event) {
        auto split = split_by_event(full, *event);
        windows.emplace_back(WindowLabel::PreRollout, std::move(split.pre));
        windows.emplace_back(WindowLabel::PostRollout, std::move(split.post));
      } else {
        rows[WindowLabel::PreRollout].push_back(
            CorrelationRow::not_available(full.company(), WindowLabel::PreRollout));
        rows[WindowLabel::PostRollout].push_back(
            CorrelationRow::not_available(full.company(), WindowLabel::PostRollout));
      }

      const AxisSpec axes = axis_for(full);
      for (const auto& [label, s] : windows) {
        rows[label].push_back(trend_price_row(s, label));
        const auto matrix = pairwise_matrix(s);
        const std::string stem = full.ticker() + "_" + std::string(file_token(label));
        write_file(out / (stem + "_matrix.csv"), render_matrix_csv(matrix));
        write_file(out / (stem + ".svg"), render_scatter(make_scatter(s, label, axes)));

        auto check = control_check(matrix, config.control_tolerance);
        if (!check.pass) {
          log.warn("control check failed: " + full.company() + " " +
                   std::string(display_name(label)) + " max deviation " +
                   format_cell(check.max_deviation) + " > " +
                   format_fixed4(config.control_tolerance));
        }
        controls.push_back({full.company(), label, std::move(check)});
      }
    }

    json tables = json::object();
    for (auto label : kAllWindows) {
      const auto table = aggregate_table(rows[label]);
      const std::string token(file_token(label));
      write_file(out / ("report_" + token + ".md"), render_table(table, TableFormat::Markdown));
      write_file(out / ("report_" + token + ".csv"), render_table(table, TableFormat::Csv));
      json jrows = json::array();
      for (const auto& r : table.rows) jrows.push_back(row_json(r));
      tables[token] = {{"rows", std::move(jrows)}, {"average", row_json(table.average_row)}};
    }

    bool all_pass = true;
    json jcontrols = json::array();
    for (const auto& c : controls) {
      all_pass = all_pass && c.result.pass;
      json dev = json::object();
      for (auto t : kReportPriceOrder)
        dev[std::string(to_string(t))] =
            coefficient_json(c.result.deviations[static_cast<std::size_t>(t)]);
      jcontrols.push_back(
          {{"company", c.company},
           {"window", std::string(display_name(c.window))},
           {"status",
            c.result.status == ControlCheckResult::Status::Skipped ? "SKIPPED" : "CHECKED"},
           {"deviations", std::move(dev)},
           {"max_deviation", coefficient_json(c.result.max_deviation)},
           {"tolerance", c.result.tolerance},
           {"pass", c.result.pass},
           {"note", c.result.note}});
    }
    write_file(out / "control_summary.csv", control_summary_csv(controls));

    const int code = all_pass ? kExitSuccess : kExitAnalysisWarning;
    json summary{{"window", {{"start", config.window.start().iso()},
                             {"end", config.window.end().iso()}}},
                 {"control_tolerance", config.control_tolerance},
                 {"tables", std::move(tables)},
                 {"control_checks", std::move(jcontrols)},
                 {"exit_code", code}};
    write_file(out / "summary.json", summary.dump(2) + "\n");
    log.info("analysis written to " + out.string());
    return code;
  } catch (const std::exception& e) {
    log.error(e.what());
    return kExitInputError;
  }
}

int cmd_run(const RunConfig& config, const CommandOptions& options, Logger& log) {
  if (const int code = cmd_ingest(config, options, log); code != kExitSuccess) return code;
  return cmd_analyze(config, options, log);
}

}  // namespace eventlens
