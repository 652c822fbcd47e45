#pragma once

#include <optional>
#include <string>
#include <variant>

#include "eventlens/model.hpp"

namespace eventlens {

struct LocalPriceFile {
  std::string path;
};

/// URL template with `{ticker}`, `{period1}` and `{period2}` placeholders
/// (epoch seconds, period2 exclusive). An optional local file is used when
/// the fetch fails or the network is disabled.
struct RemotePriceEndpoint {
  std::string url_template;
  std::optional<std::string> fallback_path;
};

using PriceSource = std::variant<LocalPriceFile, RemotePriceEndpoint>;

struct SourceConfig {
  std::string company;
  std::string ticker;
  std::string trend_keyword;
  PriceSource price_source;
  std::string trend_source;
  AnalysisWindow date_range;
};

}  // namespace eventlens
