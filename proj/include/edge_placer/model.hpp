#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace edge_placer {

// Declaration order is distance from the user.
enum class Tier { UserEdge = 0, CarrierEdge = 1, Cloud = 2 };

enum class DeviceClass { CPU = 0, GPU = 1, FPGA = 2 };

inline constexpr std::array<Tier, 3> kAllTiers{Tier::UserEdge, Tier::CarrierEdge, Tier::Cloud};
inline constexpr std::array<DeviceClass, 3> kAllDeviceClasses{DeviceClass::CPU, DeviceClass::GPU,
                                                              DeviceClass::FPGA};

constexpr std::size_t index_of(Tier t) { return static_cast<std::size_t>(t); }
constexpr std::size_t index_of(DeviceClass c) { return static_cast<std::size_t>(c); }

// Number of uplinks between a user-edge site and a site of tier `t`.
constexpr std::size_t tier_distance(Tier t) { return index_of(t); }

std::string_view to_string(Tier t);
std::string_view to_string(DeviceClass c);
std::optional<Tier> parse_tier(std::string_view s);
std::optional<DeviceClass> parse_device_class(std::string_view s);

/// Raised for malformed inputs: bad topology specs, unknown ids, invalid requests.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct DeviceNode {
  std::string id;
  std::string site_id;
  Tier tier = Tier::Cloud;
  DeviceClass device_class = DeviceClass::CPU;
  double capacity = 0.0;   // GB RAM (GPU), percent-points (FPGA), abstract units (CPU)
  double full_cost = 0.0;  // money/month at full utilization

  bool operator==(const DeviceNode&) const = default;
};

struct Link {
  std::string id;
  std::string child_site;
  std::string parent_site;
  double bandwidth_capacity = 0.0;  // Mbps
  double monthly_cost = 0.0;        // money/month at full utilization

  bool operator==(const Link&) const = default;
};

struct Site {
  std::string id;
  Tier tier = Tier::Cloud;
  std::vector<std::string> devices;

  bool operator==(const Site&) const = default;
};

struct InputNode {
  std::string id;
  std::string attached_user_edge;

  bool operator==(const InputNode&) const = default;
};

/// Tree of sites with their devices, uplinks and input nodes.
///
/// Elements are stored in insertion order; lookups by id resolve to the first
/// element carrying that id. The constructor does not validate: call
/// validate_topology() for that (build_topology() always does).
class Topology {
 public:
  Topology() = default;
  Topology(std::vector<Site> sites, std::vector<DeviceNode> devices, std::vector<Link> links,
           std::vector<InputNode> input_nodes);

  const std::vector<Site>& sites() const { return sites_; }
  const std::vector<DeviceNode>& devices() const { return devices_; }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<InputNode>& input_nodes() const { return input_nodes_; }

  const Site* find_site(std::string_view id) const;
  const DeviceNode* find_device(std::string_view id) const;
  const Link* find_link(std::string_view id) const;
  const InputNode* find_input(std::string_view id) const;

  // Throwing variants.
  const Site& site(std::string_view id) const;
  const DeviceNode& device(std::string_view id) const;
  const Link& link(std::string_view id) const;
  const InputNode& input(std::string_view id) const;

  /// The link whose child is `site_id`, or nullptr for roots.
  const Link* uplink_of(std::string_view site_id) const;

  /// Sites from the input's user edge up to its root, closest first.
  std::vector<const Site*> root_path(std::string_view input_node_id) const;

  bool operator==(const Topology& other) const;

 private:
  std::vector<Site> sites_;
  std::vector<DeviceNode> devices_;
  std::vector<Link> links_;
  std::vector<InputNode> input_nodes_;

  std::unordered_map<std::string, std::size_t> site_index_;
  std::unordered_map<std::string, std::size_t> device_index_;
  std::unordered_map<std::string, std::size_t> link_index_;
  std::unordered_map<std::string, std::size_t> input_index_;
  std::unordered_map<std::string, std::size_t> uplink_index_;  // child site -> link
};

struct FleetEntry {
  DeviceClass device_class = DeviceClass::CPU;
  int count = 0;
  double capacity = 0.0;
  double full_cost = 0.0;  // per device
};

struct TierSpec {
  int site_count = 0;
  std::vector<FleetEntry> fleet;  // devices per site
};

struct LinkSpec {
  double bandwidth_capacity = 0.0;
  double monthly_cost = 0.0;

  bool operator==(const LinkSpec&) const = default;
};

struct TopologySpec {
  std::array<TierSpec, 3> tiers;  // indexed by Tier
  LinkSpec user_uplink;           // user edge -> carrier edge
  LinkSpec carrier_uplink;        // carrier edge -> cloud
  int input_nodes = 0;

  TierSpec& tier(Tier t) { return tiers[index_of(t)]; }
  const TierSpec& tier(Tier t) const { return tiers[index_of(t)]; }
};

/// Builds a balanced tree: child i of a tier with `n` children over `m`
/// parents attaches to parent i / (n / m). Ids are deterministic.
/// Throws ValidationError on non-divisible counts or invalid capacities/costs.
Topology build_topology(const TopologySpec& spec);

/// Links from the input's user edge up to `site_id`. Empty when the site is
/// the user edge itself. Throws ValidationError if the site is not on the
/// input's root path.
std::vector<std::string> uplink_path(const Topology& topology, std::string_view input_node_id,
                                     std::string_view site_id);

std::vector<std::string> validate_topology(const Topology& topology);

/// Canonical text dump, one element per line.
std::string to_text(const Topology& topology);

}  // namespace edge_placer
