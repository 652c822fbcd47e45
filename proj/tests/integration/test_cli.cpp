#include <doctest.h>

#include "fixture_dir.hpp"
#include "fixtures.hpp"
#include "process.hpp"

using eventlens::test::run_process;
using eventlens::test::TempDir;

namespace {

const std::string kCli = EVENTLENS_CLI_PATH;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("missing config file prints usage and exits 1") {
    const auto r = run_process(kCli, {"run", "--config", "/nonexistent/run.json", "--out", "/tmp/x"});
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("/nonexistent/run.json") != std::string::npos);
    CHECK(r.output.find("Usage") != std::string::npos);
  }

  TEST_CASE("missing --config is a usage error") {
    const auto r = run_process(kCli, {"analyze"});
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("--config") != std::string::npos);
  }

  TEST_CASE("unknown subcommand") {
    CHECK(run_process(kCli, {"frobnicate"}).exit_code == 1);
  }

  TEST_CASE("no output directory anywhere is a config error") {
    TempDir dir;
    eventlens::test::copy_fixture(dir.path());
    const auto r = run_process("/usr/bin/env", {"-u", "EVENTLENS_OUT", kCli, "ingest", "--offline", "--config",
                                                (dir.path() / "config.json").string()});
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("output directory") != std::string::npos);
  }

  TEST_CASE("run then analyze on the bundled fixture") {
    TempDir dir;
    const auto config = (eventlens::test::fixture_dir() / "config.json").string();
    const auto out = (dir.path() / "out").string();
    const auto r = run_process(kCli, {"run", "--offline", "--config", config, "--out", out, "--seed", "3"});
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(std::filesystem::exists(dir.path() / "out" / "report_full.md"));
    const auto again = run_process(kCli, {"analyze", "--config", config, "--out", out});
    CHECK(again.exit_code == 0);
  }

  TEST_CASE("--version") {
    const auto r = run_process(kCli, {"--version"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("eventlens 0.1.0") != std::string::npos);
  }
}
