#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edge_placer/simulator.hpp"

namespace edge_placer::cli {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,    // validate/report found problems
  kInvalidInput = 2,  // bad scenario, flags, CSV or index
  kIoFailure = 3,
};

inline constexpr const char* kSeedEnvVar = "EDGE_PLACER_SEED";
inline constexpr std::uint64_t kDefaultSeed = 42;

enum class Preset { None, Paper, Demo };

struct ScenarioSource {
  Preset preset = Preset::None;
  std::string path;
};

struct RunConfig {
  ScenarioSource scenario;
  std::vector<Pattern> patterns;
  std::size_t requests = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string output_dir = ".";
};

struct EmitLpConfig {
  ScenarioSource scenario;
  Pattern pattern = Pattern::Pattern1;
  std::size_t request_index = 1;  // 1-based
  std::size_t bound_index = 0;    // 0-based rung of the ladder
  std::uint64_t seed = kDefaultSeed;
  std::string output;  // empty: stdout
};

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_emit_lp(const EmitLpConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(const ScenarioSource& source, std::ostream& out, std::ostream& err);
int cmd_report(const std::vector<std::string>& csv_paths, const std::optional<ScenarioSource>& scenario,
               std::ostream& out, std::ostream& err);

/// Entry point: parses argv and dispatches to the commands above.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edge_placer::cli
