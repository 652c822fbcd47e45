#include "eventlens/config.hpp"

#include <set>

#include <json.hpp>

#include "eventlens/error.hpp"
#include "eventlens/ingest.hpp"

namespace eventlens {

namespace {

using json = nlohmann::json;

const json& required(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) throw ConfigError(where + ": missing '" + key + "'");
  return *it;
}

std::string required_string(const json& obj, const char* key, const std::string& where) {
  const json& v = required(obj, key, where);
  if (!v.is_string() || v.get<std::string>().empty())
    throw ConfigError(where + ": '" + key + "' must be a non-empty string");
  return v.get<std::string>();
}

Date parse_date(const json& v, const std::string& where) {
  if (v.is_string())
    if (auto d = Date::parse_iso(v.get<std::string>())) return *d;
  throw ConfigError(where + ": expected an ISO date (YYYY-MM-DD)");
}

AnalysisWindow parse_window(const json& v, const std::string& where) {
  if (!v.is_object()) throw ConfigError(where + ": expected {\"start\", \"end\"}");
  const Date start = parse_date(required(v, "start", where), where + ".start");
  const Date end = parse_date(required(v, "end", where), where + ".end");
  if (end < start) throw ConfigError(where + ": end precedes start");
  return AnalysisWindow{WindowLabel::Full, start, end};
}

std::string resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return (path.is_absolute() ? path : base / path).lexically_normal().string();
}

PriceSource parse_price_source(const json& v, const std::filesystem::path& base,
                               const std::string& where) {
  if (!v.is_object()) throw ConfigError(where + ": expected an object");
  const bool has_file = v.contains("file");
  const bool has_url = v.contains("url");
  if (has_file == has_url) throw ConfigError(where + ": set exactly one of 'file' or 'url'");
  if (has_file) return LocalPriceFile{resolve(base, required_string(v, "file", where))};
  RemotePriceEndpoint remote{required_string(v, "url", where), std::nullopt};
  if (v.contains("fallback_file"))
    remote.fallback_path = resolve(base, required_string(v, "fallback_file", where));
  return remote;
}

}  // namespace

AnalysisWindow default_analysis_window() {
  return AnalysisWindow{WindowLabel::Full, Date{2020, 1, 1}, Date{2021, 4, 13}};
}

RunConfig parse_run_config(std::string_view text, const std::filesystem::path& base_dir) {
  const json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw ConfigError("config is not a JSON object");

  RunConfig config;
  if (doc.contains("window")) config.window = parse_window(doc["window"], "window");
  if (doc.contains("output_dir")) {
    const json& v = doc["output_dir"];
    if (!v.is_string()) throw ConfigError("output_dir must be a string");
    config.output_dir = resolve(base_dir, v.get<std::string>());
  }
  if (doc.contains("control_tolerance")) {
    const json& v = doc["control_tolerance"];
    if (!v.is_number() || v.get<double>() < 0)
      throw ConfigError("control_tolerance must be a non-negative number");
    config.control_tolerance = v.get<double>();
  }
  if (doc.contains("seed")) {
    const json& v = doc["seed"];
    if (!v.is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
    config.seed = v.get<std::uint64_t>();
  }
  if (doc.contains("verify_sample_size")) {
    const json& v = doc["verify_sample_size"];
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
      throw ConfigError("verify_sample_size must be a positive integer");
    config.verify_sample_size = v.get<std::size_t>();
  }
  if (doc.contains("user_agent")) config.user_agent = required_string(doc, "user_agent", "config");

  if (doc.contains("events")) {
    const json& events = doc["events"];
    if (!events.is_object()) throw ConfigError("events must map company -> date or null");
    for (const auto& [company, date] : events.items()) {
      config.events.set(company, date.is_null() || date == "N/A"
                                     ? std::nullopt
                                     : std::optional<Date>(parse_date(date, "events." + company)));
    }
  }

  const json& companies = required(doc, "companies", "config");
  if (!companies.is_array()) throw ConfigError("companies must be an array");
  std::set<std::string> names, tickers;
  for (std::size_t i = 0; i < companies.size(); ++i) {
    const json& c = companies[i];
    const std::string where = "companies[" + std::to_string(i) + "]";
    if (!c.is_object()) throw ConfigError(where + ": expected an object");
    const std::string name = required_string(c, "company", where);
    const std::string ticker = required_string(c, "ticker", where);
    if (!names.insert(name).second) throw ConfigError(where + ": duplicate company " + name);
    if (!tickers.insert(ticker).second) throw ConfigError(where + ": duplicate ticker " + ticker);
    config.companies.push_back(SourceConfig{
        name,
        ticker,
        c.contains("trend_keyword") ? required_string(c, "trend_keyword", where) : name,
        parse_price_source(required(c, "price_source", where), base_dir, where + ".price_source"),
        resolve(base_dir, required_string(c, "trend_source", where)),
        c.contains("date_range") ? parse_window(c["date_range"], where + ".date_range")
                                 : config.window,
    });
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return parse_run_config(read_file(path.string()), path.parent_path());
}

}  // namespace eventlens
