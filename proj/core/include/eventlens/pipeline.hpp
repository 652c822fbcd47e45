#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "eventlens/config.hpp"
#include "eventlens/fetch.hpp"
#include "eventlens/log.hpp"

namespace eventlens {

/// Process exit codes. Stable contract.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitInputError = 1,
  kExitAnalysisWarning = 2,  // control check failed; outputs still written
};

struct CommandOptions {
  std::optional<std::filesystem::path> out;  // overrides config output_dir
  std::optional<std::uint64_t> seed;         // overrides config seed
  bool offline = false;                      // forbid network access
  HttpTransport transport = http_get;
};

/// --out, then config output_dir, then $EVENTLENS_OUT. Throws ConfigError
/// when none is set.
std::filesystem::path resolve_output_dir(const RunConfig& config, const CommandOptions& options);

/// Parse, validate, merge and snapshot every company, then cross-check a
/// seeded sample of each merged snapshot against its raw inputs.
int cmd_ingest(const RunConfig& config, const CommandOptions& options, Logger& log);

/// Read merged snapshots and write per-window reports, matrices, scatter
/// plots, `control_summary.csv` and `summary.json`.
int cmd_analyze(const RunConfig& config, const CommandOptions& options, Logger& log);

/// cmd_ingest, then cmd_analyze if ingestion succeeded.
int cmd_run(const RunConfig& config, const CommandOptions& options, Logger& log);

}  // namespace eventlens
