// eventlens: search-trend vs. price event-study pipeline.
//
//   eventlens ingest  --config run.json [--out DIR] [--offline] [--seed N]
//   eventlens analyze --config run.json [--out DIR]
//   eventlens run     --config run.json [--out DIR] [--offline] [--seed N]
//
// Exit codes: 0 success, 1 input/config error, 2 control check failed.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eventlens/config.hpp"
#include "eventlens/error.hpp"
#include "eventlens/log.hpp"
#include "eventlens/pipeline.hpp"

namespace {

struct Args {
  std::string config;
  std::string out;
  bool offline = false;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Args& args) {
  cmd->add_option("--config", args.config, "Run configuration (JSON)")->required();
  cmd->add_option("--out", args.out, "Output directory (overrides config and EVENTLENS_OUT)");
  cmd->add_flag("--offline", args.offline, "Forbid network access; use fallback files");
  cmd->add_option("--seed", args.seed, "Seed for snapshot verification sampling");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eventlens - correlate search-trend attention with equity prices around events"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "eventlens 0.1.0");

  Args args;
  auto* ingest = app.add_subcommand("ingest", "Parse, merge, snapshot and verify inputs");
  auto* analyze = app.add_subcommand("analyze", "Correlation reports, matrices and plots");
  auto* run = app.add_subcommand("run", "ingest then analyze");
  for (auto* cmd : {ingest, analyze, run}) add_common(cmd, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return eventlens::kExitInputError;
  }

  eventlens::Logger log(std::cerr);
  eventlens::RunConfig config;
  try {
    if (!std::filesystem::is_regular_file(args.config)) {
      throw eventlens::IoError(args.config, "config file not found");
    }
    config = eventlens::load_run_config(args.config);
  } catch (const std::exception& e) {
    log.error(e.what());
    std::cerr << app.help();
    return eventlens::kExitInputError;
  }

  eventlens::CommandOptions options;
  if (!args.out.empty()) options.out = args.out;
  options.seed = args.seed;
  options.offline = args.offline;

  if (ingest->parsed()) return eventlens::cmd_ingest(config, options, log);
  if (analyze->parsed()) return eventlens::cmd_analyze(config, options, log);
  return eventlens::cmd_run(config, options, log);
}
