#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edge_placer/model.hpp"
#include "edge_placer/pricing.hpp"

namespace edge_placer {

inline constexpr int kScenarioSchemaVersion = 1;

/// How a device's full monthly cost derives from the unit-price table.
enum class PricingMode {
  PerUnit,     // unit_price[tier][class] * device capacity
  FlatServer,  // unit_price[tier][class] * reference_capacity[class], regardless of capacity
};

struct ServerFleet {
  DeviceClass device_class = DeviceClass::CPU;
  int count = 0;
  double capacity = 0.0;

  bool operator==(const ServerFleet&) const = default;
};

struct ScenarioTopology {
  std::array<int, 3> site_counts{};              // indexed by Tier
  int input_nodes = 0;
  std::array<std::vector<ServerFleet>, 3> fleets;  // per site, indexed by Tier

  bool operator==(const ScenarioTopology&) const = default;
};

struct Pricing {
  PricingMode mode = PricingMode::PerUnit;
  std::array<std::array<double, 3>, 3> unit_price{};  // [tier][class], money per unit per month
  std::array<double, 3> reference_capacity{};          // [class], used by FlatServer

  bool operator==(const Pricing&) const = default;
};

struct LinkTable {
  LinkSpec user_uplink;     // user edge -> carrier edge
  LinkSpec carrier_uplink;  // carrier edge -> cloud

  bool operator==(const LinkTable&) const = default;
};

/// An app with its request-generation parameters.
struct AppProfile {
  AppType app;
  double mix_weight = 0.0;
  bool partially_placeable = false;
  std::vector<double> price_ladder;     // cheapest first
  std::vector<double> deadline_ladder;  // tightest first

  bool operator==(const AppProfile&) const = default;
};

struct Scenario {
  int schema_version = kScenarioSchemaVersion;
  std::string name;
  ScenarioTopology topology;
  Pricing pricing;
  LinkTable links;
  std::vector<AppProfile> apps;

  const AppProfile* find_app(std::string_view name) const;

  bool operator==(const Scenario&) const = default;
};

/// Parse or schema failure. `line` is 1-based, or 0 when no single line is at fault.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(int line, const std::string& message);
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

double device_full_cost(const Pricing& pricing, Tier tier, DeviceClass device_class, double capacity);

TopologySpec topology_spec(const Scenario& scenario);

/// Builds the scenario's topology; throws ValidationError on structural problems.
Topology build_topology(const Scenario& scenario);

/// Semantic problems (empty list when valid), including topology invariants.
std::vector<std::string> validate_scenario(const Scenario& scenario);

/// The five-cloud / 20-carrier / 60-user-edge evaluation setup with the
/// NAS.FT and MRI-Q profiles, unit-priced devices and the request menus.
Scenario paper_scenario();

/// One user edge hosting one CPU and one GPU server, with two apps: "A" gains
/// 1.5x from its GPU variant at 2x the price, "B" gains 3x at 2x the price.
Scenario cost_performance_demo_scenario();

Scenario parse_scenario(std::string_view text);
std::string serialize_scenario(const Scenario& scenario);

Scenario load_scenario_file(const std::string& path);

/// FNV-1a over the serialized form.
std::uint64_t scenario_hash(const Scenario& scenario);

}  // namespace edge_placer
