#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edge_placer/scenario.hpp"
#include "edge_placer/solver.hpp"

namespace edge_placer {

enum class Pattern {
  Pattern1 = 1,  // one bound drawn uniformly from the app's combined menu
  Pattern2 = 2,  // full price ladder, cheapest first
  Pattern3 = 3,  // full deadline ladder, tightest first
};

inline constexpr std::array<Pattern, 3> kAllPatterns{Pattern::Pattern1, Pattern::Pattern2, Pattern::Pattern3};

inline int to_int(Pattern p) { return static_cast<int>(p); }
std::optional<Pattern> pattern_from_int(int n);

/// splitmix64. The generator and draw order are part of the trace format:
/// other implementations must reproduce them to get identical streams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Pattern-1 menu for an app: each price bound, then each deadline, as single-bound requirements.
std::vector<Requirement> single_bound_menu(const AppProfile& app);

/// Requests with ids 1..n. Per request the draws are, in order: the app
/// (u < cumulative mix share), the input node (next mod input count), and for
/// Pattern1 only the menu entry (next mod menu size). Requests point into
/// `scenario.apps`, which must outlive the result.
std::vector<PlacementRequest> generate_requests(const Scenario& scenario, const Topology& topology, Pattern pattern,
                                                std::size_t n, std::uint64_t seed);
std::vector<PlacementRequest> generate_requests(const Scenario& scenario, Pattern pattern, std::size_t n,
                                                std::uint64_t seed);

struct Trace {
  std::uint64_t scenario_hash = 0;
  Pattern pattern = Pattern::Pattern1;
  std::uint64_t seed = 0;
  std::vector<RequestOutcome> outcomes;
  ResidualState final_state;
};

/// Resolves `requests` in order against a fresh residual state.
Trace run_requests(const Topology& topology, std::span<const PlacementRequest> requests);

Trace run_simulation(const Scenario& scenario, const Topology& topology, Pattern pattern, std::size_t n,
                     std::uint64_t seed);
Trace run_simulation(const Scenario& scenario, Pattern pattern, std::size_t n, std::uint64_t seed);

/// Reapplies the trace's placements to a fresh state.
ResidualState replay(const Topology& topology, std::span<const RequestOutcome> outcomes);

struct MetricsPoint {
  std::size_t placement_index = 0;  // 1-based count of placed requests
  std::uint64_t request_id = 0;
  double running_avg_response = 0.0;
  std::array<std::size_t, 3> tier_counts{};  // indexed by Tier
  std::size_t rejections = 0;                // rejections so far
  double cumulative_price = 0.0;
};

struct MetricsSeries {
  std::vector<MetricsPoint> points;  // one per placed outcome
  std::size_t rejections = 0;
  std::size_t requests = 0;

  /// Running average after `placement_index` placements (1-based).
  double average_at(std::size_t placement_index) const { return points.at(placement_index - 1).running_avg_response; }
};

MetricsSeries compute_metrics(std::span<const RequestOutcome> outcomes);
inline MetricsSeries compute_metrics(const Trace& trace) { return compute_metrics(trace.outcomes); }

}  // namespace edge_placer
