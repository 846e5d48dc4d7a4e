#include "edge_placer/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "edge_placer/lp_export.hpp"
#include "edge_placer/numeric.hpp"
#include "edge_placer/trace_csv.hpp"

namespace edge_placer::cli {

namespace {

namespace fs = std::filesystem;

// Scenario problems are reported here and mapped to kInvalidInput.
std::optional<Scenario> load(const ScenarioSource& source, std::ostream& err) {
  Scenario s;
  try {
    switch (source.preset) {
      case Preset::Paper: s = paper_scenario(); break;
      case Preset::Demo: s = cost_performance_demo_scenario(); break;
      case Preset::None:
        if (source.path.empty()) {
          err << "error: no scenario given (use --paper, --demo or --scenario PATH)\n";
          return std::nullopt;
        }
        s = load_scenario_file(source.path);
        break;
    }
  } catch (const ScenarioError& e) {
    err << "error: scenario " << (source.path.empty() ? "" : "'" + source.path + "' ") << e.what() << '\n';
    return std::nullopt;
  }
  return s;
}

std::optional<Scenario> load_valid(const ScenarioSource& source, std::ostream& err) {
  auto s = load(source, err);
  if (!s) return std::nullopt;
  auto violations = validate_scenario(*s);
  if (!violations.empty()) {
    for (const auto& v : violations) err << "error: " << v << '\n';
    return std::nullopt;
  }
  return s;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

std::string yen(double v) { return format_fixed(v, 2); }
std::string seconds(double v) { return format_fixed(v, 3); }

struct PatternResult {
  Pattern pattern;
  Trace trace;
  MetricsSeries metrics;
  std::string csv;
};

std::vector<std::size_t> checkpoints(std::size_t placed) {
  std::vector<std::size_t> out;
  for (std::size_t i = 100; i <= placed; i += 100) out.push_back(i);
  if (placed > 0 && (out.empty() || out.back() != placed)) out.push_back(placed);
  return out;
}

std::string summary_markdown(const Scenario& scenario, const RunConfig& config,
                             const std::vector<PatternResult>& results) {
  std::ostringstream os;
  os << "# Placement run summary\n\n";
  os << "- scenario: " << (scenario.name.empty() ? "(unnamed)" : scenario.name) << " (hash "
     << hex(scenario_hash(scenario)) << ")\n";
  os << "- seed: " << config.seed << "\n";
  os << "- requests per pattern: " << config.requests << "\n\n";

  os << "| pattern | placed | rejected | final avg response (s) | user edge | carrier edge | cloud | total price (yen) |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const PatternResult& r : results) {
    const auto& pts = r.metrics.points;
    os << "| " << to_int(r.pattern) << " | " << pts.size() << " | " << r.metrics.rejections << " | ";
    if (pts.empty()) {
      os << "- | 0 | 0 | 0 | 0.00 |\n";
      continue;
    }
    const MetricsPoint& last = pts.back();
    os << seconds(last.running_avg_response) << " | " << last.tier_counts[index_of(Tier::UserEdge)] << " | "
       << last.tier_counts[index_of(Tier::CarrierEdge)] << " | " << last.tier_counts[index_of(Tier::Cloud)] << " | "
       << yen(last.cumulative_price) << " |\n";
  }

  std::size_t max_placed = 0;
  for (const PatternResult& r : results) max_placed = std::max(max_placed, r.metrics.points.size());
  os << "\n## Running average response time (s) by placements\n\n| placements |";
  for (const PatternResult& r : results) os << " pattern " << to_int(r.pattern) << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < results.size(); ++i) os << "---|";
  os << '\n';
  for (std::size_t cp : checkpoints(max_placed)) {
    os << "| " << cp << " |";
    for (const PatternResult& r : results) {
      if (cp <= r.metrics.points.size()) os << ' ' << seconds(r.metrics.average_at(cp)) << " |";
      else os << " - |";
    }
    os << '\n';
  }
  return os.str();
}

bool write_file(const fs::path& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (f) f << content;
  if (!f) {
    err << "error: cannot write '" << path.string() << "'\n";
    return false;
  }
  return true;
}

std::string metrics_table(const MetricsSeries& m) {
  std::ostringstream os;
  os << "| placements | avg response (s) | user edge | carrier edge | cloud | rejected so far |\n";
  os << "|---|---|---|---|---|---|\n";
  for (std::size_t cp : checkpoints(m.points.size())) {
    const MetricsPoint& p = m.points[cp - 1];
    os << "| " << cp << " | " << seconds(p.running_avg_response) << " | " << p.tier_counts[index_of(Tier::UserEdge)]
       << " | " << p.tier_counts[index_of(Tier::CarrierEdge)] << " | " << p.tier_counts[index_of(Tier::Cloud)] << " | "
       << p.rejections << " |\n";
  }
  return os.str();
}

}  // namespace

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto scenario = load_valid(config.scenario, err);
  if (!scenario) return kInvalidInput;
  Topology topology;
  try {
    topology = build_topology(*scenario);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  std::vector<std::future<PatternResult>> jobs;
  for (Pattern p : config.patterns) {
    jobs.push_back(std::async(std::launch::async, [&, p] {
      PatternResult r{p, run_simulation(*scenario, topology, p, config.requests, config.seed), {}, {}};
      r.metrics = compute_metrics(r.trace);
      r.csv = trace_csv(r.trace.outcomes);
      return r;
    }));
  }
  std::vector<PatternResult> results;
  try {
    for (auto& j : jobs) results.push_back(j.get());
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  std::error_code ec;
  fs::path dir(config.output_dir);
  fs::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create output directory '" << dir.string() << "': " << ec.message() << '\n';
    return kIoFailure;
  }
  for (const PatternResult& r : results) {
    fs::path file = dir / ("trace_" + std::to_string(to_int(r.pattern)) + ".csv");
    if (!write_file(file, r.csv, err)) return kIoFailure;
    out << "wrote " << file.string() << " (" << r.metrics.points.size() << " placed, " << r.metrics.rejections
        << " rejected)\n";
  }
  fs::path summary = dir / "summary.md";
  if (!write_file(summary, summary_markdown(*scenario, config, results), err)) return kIoFailure;
  out << "wrote " << summary.string() << '\n';
  return kOk;
}

int cmd_emit_lp(const EmitLpConfig& config, std::ostream& out, std::ostream& err) {
  auto scenario = load_valid(config.scenario, err);
  if (!scenario) return kInvalidInput;
  if (config.request_index < 1) {
    err << "error: request index is 1-based\n";
    return kInvalidInput;
  }
  std::string text;
  try {
    Topology topology = build_topology(*scenario);
    auto requests = generate_requests(*scenario, topology, config.pattern, config.request_index, config.seed);
    const PlacementRequest& target = requests.back();
    if (config.bound_index >= target.requirement.bounds.size()) {
      err << "error: bound index " << config.bound_index << " is beyond the ladder of request " << target.id << " ("
          << target.requirement.bounds.size() << " bounds)\n";
      return kInvalidInput;
    }
    Trace before = run_requests(topology, std::span(requests).first(requests.size() - 1));
    Bound bound = target.requirement.at(config.bound_index);
    IlpModel model = build_ilp(topology, before.final_state, target, bound);
    auto best = solve_request(topology, before.final_state, target, bound);

    std::vector<std::string> comments{
        "scenario " + (scenario->name.empty() ? std::string("(unnamed)") : scenario->name) + " hash " +
            hex(scenario_hash(*scenario)),
        "pattern " + std::to_string(to_int(config.pattern)) + " seed " + std::to_string(config.seed) + " request " +
            std::to_string(target.id) + " app " + target.app->name + " input " + target.input_node,
        std::string("bound ") + std::string(to_string(bound.kind)) + " " + format_roundtrip(bound.value),
        best ? "solver optimum " + format_roundtrip(bound.kind == BoundKind::CostCap ? best->response_time : best->price) +
                   " at " + best->device_id
             : std::string("solver optimum infeasible")};
    text = to_lp_text(model, comments);
    if (model.binaries.empty()) err << "warning: no candidate devices for request " << target.id
                                    << "; emitted an infeasible model\n";
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  if (config.output.empty()) {
    out << text;
    return kOk;
  }
  return write_file(config.output, text, err) ? kOk : kIoFailure;
}

int cmd_validate(const ScenarioSource& source, std::ostream& out, std::ostream& err) {
  auto scenario = load(source, err);
  if (!scenario) return kInvalidInput;
  auto violations = validate_scenario(*scenario);
  for (const auto& v : violations) out << "violation: " << v << '\n';
  if (!violations.empty()) return kViolations;
  Topology topology = build_topology(*scenario);
  out << "ok: " << topology.sites().size() << " sites, " << topology.devices().size() << " devices, "
      << topology.links().size() << " links, " << topology.input_nodes().size() << " input nodes\n";
  return kOk;
}

int cmd_report(const std::vector<std::string>& csv_paths, const std::optional<ScenarioSource>& source,
               std::ostream& out, std::ostream& err) {
  if (csv_paths.empty()) {
    err << "error: no trace CSV files given\n";
    return kInvalidInput;
  }
  std::optional<Scenario> scenario;
  if (source) {
    scenario = load_valid(*source, err);
    if (!scenario) return kInvalidInput;
  }

  bool clean = true;
  for (const std::string& path : csv_paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err << "error: cannot read '" << path << "'\n";
      return kIoFailure;
    }
    std::vector<CsvRow> rows;
    try {
      rows = parse_trace_csv(in);
    } catch (const CsvError& e) {
      err << "error: " << path << ": " << e.what() << '\n';
      return kInvalidInput;
    }
    MetricsSeries m = compute_metrics(outcomes_from_rows(rows));
    out << "## " << fs::path(path).stem().string() << "\n\n";
    out << m.points.size() << " placed, " << m.rejections << " rejected of " << m.requests << " requests\n\n";
    out << metrics_table(m) << '\n';
    for (const std::string& issue : check_trace_rows(rows, scenario ? &*scenario : nullptr)) {
      out << "mismatch: " << path << ": " << issue << '\n';
      clean = false;
    }
  }
  return clean ? kOk : kViolations;
}

namespace {

void add_scenario_options(CLI::App* cmd, ScenarioSource& src, bool& paper, bool& demo) {
  auto* p = cmd->add_flag("--paper", paper, "Use the built-in evaluation scenario");
  auto* d = cmd->add_flag("--demo", demo, "Use the built-in cost-performance demo scenario");
  auto* s = cmd->add_option("--scenario", src.path, "Scenario file");
  p->excludes(d)->excludes(s);
  d->excludes(s);
}

Preset preset_of(bool paper, bool demo) { return paper ? Preset::Paper : demo ? Preset::Demo : Preset::None; }

std::optional<std::uint64_t> seed_from_env() {
  const char* v = std::getenv(kSeedEnvVar);
  if (v == nullptr || *v == '\0') return kDefaultSeed;
  std::uint64_t seed = 0;
  std::string_view s(v);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return seed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Placement optimizer and simulator for converted applications on cloud/edge topologies",
               "edge-placer"};
  app.require_subcommand(1);

  RunConfig run;
  bool run_paper = false, run_demo = false;
  std::string run_pattern = "all";
  std::optional<std::uint64_t> run_seed;
  auto* run_cmd = app.add_subcommand("run", "Run the sequential placement simulation");
  add_scenario_options(run_cmd, run.scenario, run_paper, run_demo);
  run_cmd->add_option("--pattern", run_pattern, "Request pattern: 1, 2, 3 or all")
      ->check(CLI::IsMember({"1", "2", "3", "all"}));
  run_cmd->add_option("--requests", run.requests, "Number of placement requests")->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--seed", run_seed, std::string("PRNG seed (default: $") + kSeedEnvVar + " or 42)");
  run_cmd->add_option("--out", run.output_dir, "Output directory");

  EmitLpConfig lp;
  bool lp_paper = false, lp_demo = false;
  int lp_pattern = 1;
  std::optional<std::uint64_t> lp_seed;
  auto* lp_cmd = app.add_subcommand("emit-lp", "Write the 0-1 program of one request in CPLEX LP format");
  add_scenario_options(lp_cmd, lp.scenario, lp_paper, lp_demo);
  lp_cmd->add_option("--pattern", lp_pattern, "Request pattern")->check(CLI::Range(1, 3))->required();
  lp_cmd->add_option("--request-index", lp.request_index, "1-based request index")->required();
  lp_cmd->add_option("--bound-index", lp.bound_index, "0-based ladder rung");
  lp_cmd->add_option("--seed", lp_seed, "PRNG seed");
  lp_cmd->add_option("--out", lp.output, "Output file (default: stdout)");

  ScenarioSource val;
  bool val_paper = false, val_demo = false;
  auto* val_cmd = app.add_subcommand("validate", "Check a scenario for schema and topology violations");
  add_scenario_options(val_cmd, val, val_paper, val_demo);

  ScenarioSource rep;
  bool rep_paper = false, rep_demo = false;
  std::vector<std::string> rep_files;
  auto* rep_cmd = app.add_subcommand("report", "Recompute metrics from trace CSVs and check consistency");
  add_scenario_options(rep_cmd, rep, rep_paper, rep_demo);
  rep_cmd->add_option("csv", rep_files, "Trace CSV files");

  ScenarioSource exp;
  bool exp_paper = false, exp_demo = false;
  std::string exp_out;
  auto* exp_cmd = app.add_subcommand("export-scenario", "Print a scenario in the scenario file format");
  add_scenario_options(exp_cmd, exp, exp_paper, exp_demo);
  exp_cmd->add_option("--out", exp_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  auto resolve_seed = [&](const std::optional<std::uint64_t>& flag) -> std::optional<std::uint64_t> {
    if (flag) return flag;
    auto s = seed_from_env();
    if (!s) err << "error: " << kSeedEnvVar << " is not an unsigned integer\n";
    return s;
  };

  if (*run_cmd) {
    run.scenario.preset = preset_of(run_paper, run_demo);
    if (run_pattern == "all") run.patterns.assign(kAllPatterns.begin(), kAllPatterns.end());
    else run.patterns = {*pattern_from_int(std::stoi(run_pattern))};
    auto seed = resolve_seed(run_seed);
    if (!seed) return kInvalidInput;
    run.seed = *seed;
    return cmd_run(run, out, err);
  }
  if (*lp_cmd) {
    lp.scenario.preset = preset_of(lp_paper, lp_demo);
    lp.pattern = *pattern_from_int(lp_pattern);
    auto seed = resolve_seed(lp_seed);
    if (!seed) return kInvalidInput;
    lp.seed = *seed;
    return cmd_emit_lp(lp, out, err);
  }
  if (*val_cmd) {
    val.preset = preset_of(val_paper, val_demo);
    return cmd_validate(val, out, err);
  }
  if (*rep_cmd) {
    rep.preset = preset_of(rep_paper, rep_demo);
    std::optional<ScenarioSource> src;
    if (rep.preset != Preset::None || !rep.path.empty()) src = rep;
    return cmd_report(rep_files, src, out, err);
  }
  if (*exp_cmd) {
    exp.preset = preset_of(exp_paper, exp_demo);
    auto scenario = load(exp, err);
    if (!scenario) return kInvalidInput;
    std::string text = serialize_scenario(*scenario);
    if (exp_out.empty()) {
      out << text;
      return kOk;
    }
    return write_file(exp_out, text, err) ? kOk : kIoFailure;
  }
  return kInvalidInput;
}

}  // namespace edge_placer::cli
