#include <cmath>
#include <optional>

#include <json.hpp>

#include "csv_util.hpp"
#include "eventlens/error.hpp"
#include "eventlens/fetch.hpp"

namespace eventlens {

namespace {

using json = nlohmann::json;

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw UnexpectedPayload(path);
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) throw UnexpectedPayload(path);
  return *it;
}

const json& first_element(const json& arr, const std::string& path) {
  if (!arr.is_array() || arr.empty() || arr.front().is_null()) throw UnexpectedPayload(path);
  return arr.front();
}

const json& series(const json& quote, const char* key, std::size_t n, const std::string& base) {
  const std::string path = base + "." + key;
  const json& arr = member(quote, key, path);
  if (!arr.is_array() || arr.size() != n) throw UnexpectedPayload(path);
  return arr;
}

std::optional<double> number_at(const json& arr, std::size_t i) {
  const json& v = arr[i];
  if (!v.is_number()) return std::nullopt;
  const double d = v.get<double>();
  if (!std::isfinite(d)) return std::nullopt;
  return d;
}

}  // namespace

ChartParse parse_chart_payload(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) throw UnexpectedPayload("(document is not valid JSON)");

  const json& chart = member(doc, "chart", "chart");
  const json& result = first_element(member(chart, "result", "chart.result"), "chart.result[0]");
  const std::string base = "chart.result[0]";

  std::int64_t gmtoffset = 0;
  if (auto meta = result.find("meta"); meta != result.end() && meta->is_object()) {
    if (auto off = meta->find("gmtoffset"); off != meta->end() && off->is_number_integer())
      gmtoffset = off->get<std::int64_t>();
  }

  ChartParse out;
  // A range with no trading days comes back without a timestamp array.
  auto ts_it = result.find("timestamp");
  if (ts_it == result.end() || ts_it->is_null()) {
    member(result, "indicators", base + ".indicators");
    return out;
  }
  const json& timestamps = *ts_it;
  if (!timestamps.is_array()) throw UnexpectedPayload(base + ".timestamp");
  const std::size_t n = timestamps.size();

  const json& quote = first_element(
      member(member(result, "indicators", base + ".indicators"), "quote",
             base + ".indicators.quote"),
      base + ".indicators.quote[0]");
  const std::string qbase = base + ".indicators.quote[0]";
  const json& open = series(quote, "open", n, qbase);
  const json& high = series(quote, "high", n, qbase);
  const json& low = series(quote, "low", n, qbase);
  const json& close = series(quote, "close", n, qbase);
  const json* volume = nullptr;
  if (auto v = quote.find("volume"); v != quote.end() && v->is_array()) {
    if (v->size() != n) throw UnexpectedPayload(qbase + ".volume");
    volume = &*v;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!timestamps[i].is_number_integer())
      throw UnexpectedPayload(base + ".timestamp[" + std::to_string(i) + "]");
    const Date date = Date::from_epoch_seconds(timestamps[i].get<std::int64_t>() + gmtoffset);
    const auto o = number_at(open, i), h = number_at(high, i), l = number_at(low, i),
               c = number_at(close, i);
    if (!o || !h || !l || !c) {
      std::string which;
      if (!o) which += " open";
      if (!h) which += " high";
      if (!l) which += " low";
      if (!c) which += " close";
      out.skipped.push_back(date.iso() + ": null" + which);
      continue;
    }
    std::optional<std::int64_t> vol;
    if (volume && (*volume)[i].is_number()) vol = (*volume)[i].get<std::int64_t>();
    try {
      out.bars.emplace_back(date, *o, *h, *l, *c, vol);
    } catch (const InvariantViolation& e) {
      throw BadRow(i + 1, e.what());
    }
  }
  detail::sort_unique_by_date(out.bars);
  return out;
}

std::string expand_endpoint(std::string_view url_template, std::string_view ticker,
                            const AnalysisWindow& range) {
  const std::pair<std::string_view, std::string> subs[] = {
      {"{ticker}", std::string(ticker)},
      {"{period1}", std::to_string(range.start().epoch_seconds())},
      {"{period2}", std::to_string(range.end().add_days(1).epoch_seconds())},
  };
  std::string url(url_template);
  for (const auto& [key, value] : subs) {
    for (auto pos = url.find(key); pos != std::string::npos; pos = url.find(key, pos + value.size()))
      url.replace(pos, key.size(), value);
  }
  return url;
}

ChartParse fetch_price_history(const SourceConfig& config, const FetchOptions& options) {
  const auto* remote = std::get_if<RemotePriceEndpoint>(&config.price_source);
  if (!remote) throw ConfigError(config.company + ": price source is not a remote endpoint");
  if (!options.transport) throw ConfigError("no HTTP transport configured");

  HttpRequest request{expand_endpoint(remote->url_template, config.ticker, config.date_range),
                      options.user_agent, options.timeout};

  std::string last_error;
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    HttpResponse response;
    try {
      response = options.transport(request);
    } catch (const NetworkError& e) {
      last_error = e.what();
      continue;
    }
    if (response.status >= 200 && response.status < 300) return parse_chart_payload(response.body);
    last_error = "HTTP " + std::to_string(response.status) + " from " + request.url;
    const bool transient = response.status == 429 || response.status >= 500;
    if (!transient) break;
  }
  throw NetworkError(config.company + ": " + last_error);
}

}  // namespace eventlens
