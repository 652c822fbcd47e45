#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eventlens/model.hpp"
#include "eventlens/source.hpp"

namespace eventlens {

struct ChartParse {
  std::vector<PriceBar> bars;
  std::vector<std::string> skipped;  // one note per day dropped for null prices
};

/// Decodes a v8 chart response: `chart.result[0].timestamp[]` with
/// `indicators.quote[0].{open,high,low,close,volume}[]`. Days with a null
/// price are skipped. Timestamps are shifted by `meta.gmtoffset` when present
/// so that each bar lands on its exchange-local trading day.
/// Throws UnexpectedPayload naming the first missing field, BadRow (1-based
/// entry index) for invalid prices, DuplicateDate.
ChartParse parse_chart_payload(std::string_view json);

struct HttpRequest {
  std::string url;
  std::string user_agent;
  std::chrono::seconds timeout{30};
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

/// Performs one GET. Throws NetworkError when no response was received.
using HttpTransport = std::function<HttpResponse(const HttpRequest&)>;

/// Blocking GET over cpp-httplib; supports http:// and https:// URLs.
HttpResponse http_get(const HttpRequest& request);

struct FetchOptions {
  std::string user_agent = "eventlens/0.1";
  std::chrono::seconds timeout{30};
  int retries = 1;
  HttpTransport transport = http_get;
};

/// Substitutes `{ticker}`, `{period1}` (window start) and `{period2}` (day
/// after window end), both as epoch seconds at 00:00 UTC.
std::string expand_endpoint(std::string_view url_template, std::string_view ticker,
                            const AnalysisWindow& range);

/// GETs the configured endpoint (retrying transient failures `retries`
/// times) and decodes the payload. Requires a RemotePriceEndpoint source.
ChartParse fetch_price_history(const SourceConfig& config, const FetchOptions& options = {});

}  // namespace eventlens
