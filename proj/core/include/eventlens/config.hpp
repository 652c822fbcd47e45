#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "eventlens/model.hpp"
#include "eventlens/source.hpp"

namespace eventlens {

/// Default analysis span: 2020-01-01 through 2021-04-13.
AnalysisWindow default_analysis_window();

struct RunConfig {
  std::vector<SourceConfig> companies;
  EventRegistry events;
  AnalysisWindow window = default_analysis_window();
  std::filesystem::path output_dir;  // empty: resolved from --out / EVENTLENS_OUT
  double control_tolerance = 0.05;
  std::uint64_t seed = 0;
  std::size_t verify_sample_size = 10;
  std::string user_agent = "eventlens/0.1";
};

/// Parses a JSON run configuration. Relative file paths are resolved against
/// `base_dir`. Throws ConfigError on schema or invariant violations
/// (duplicate companies or tickers, invalid dates, negative tolerance).
///
///   {
///     "companies": [{"company": "Moderna", "ticker": "MRNA",
///                    "trend_keyword": "Moderna",
///                    "price_source": {"file": "prices/MRNA.csv"},
///                    "trend_source": "trends/MRNA.csv"}],
///     "events": {"Moderna": "2020-12-21", "NovaVax": null},
///     "window": {"start": "2020-01-01", "end": "2021-04-13"},
///     "output_dir": "out", "control_tolerance": 0.05, "seed": 7
///   }
///
/// `price_source` may instead be `{"url": "<template>", "fallback_file": "..."}`.
RunConfig parse_run_config(std::string_view json, const std::filesystem::path& base_dir);

/// Reads and parses `path`; throws IoError if unreadable.
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace eventlens
