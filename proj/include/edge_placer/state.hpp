#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "edge_placer/model.hpp"

namespace edge_placer {

enum class BoundKind { CostCap, Deadline };

std::string_view to_string(BoundKind k);
std::optional<BoundKind> parse_bound_kind(std::string_view s);

/// One rung of a requirement ladder: a price cap (money) or a deadline (seconds).
struct Bound {
  BoundKind kind = BoundKind::CostCap;
  double value = 0.0;

  bool operator==(const Bound&) const = default;
};

/// An accepted placement with its evaluated response time R and price P.
struct Placement {
  std::uint64_t request_id = 0;
  std::string app;
  std::string device_id;
  Tier tier = Tier::Cloud;
  DeviceClass variant_class = DeviceClass::CPU;
  std::vector<std::string> path;  // link ids, user edge upward
  double resource_demand = 0.0;
  double bandwidth_demand = 0.0;
  double response_time = 0.0;
  double price = 0.0;
  Bound granted_bound;

  bool operator==(const Placement&) const = default;
};

/// Remaining device resources and link bandwidth after accepted placements.
class ResidualState {
 public:
  ResidualState() = default;

  /// Every device and link at full capacity.
  static ResidualState fresh(const Topology& topology);

  double device_residual(std::string_view device_id) const;
  double link_residual(std::string_view link_id) const;

  const std::map<std::string, double, std::less<>>& device_residuals() const { return devices_; }
  const std::map<std::string, double, std::less<>>& link_residuals() const { return links_; }
  const std::vector<Placement>& placements() const { return placements_; }

  /// Decrements residuals along the placement's device and path and records it.
  /// Throws ValidationError if any residual would drop below zero (beyond tolerance).
  void apply(const Placement& placement);

  /// Direct override, for tests and replay tooling. Throws on unknown ids.
  void set_device_residual(std::string_view device_id, double value);
  void set_link_residual(std::string_view link_id, double value);

  bool operator==(const ResidualState&) const = default;

 private:
  std::map<std::string, double, std::less<>> devices_;
  std::map<std::string, double, std::less<>> links_;
  std::vector<Placement> placements_;
};

/// Free-function form of ResidualState::apply.
ResidualState apply_placement(ResidualState state, const Placement& placement);

}  // namespace edge_placer
