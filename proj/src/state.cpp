#include "edge_placer/state.hpp"

#include "edge_placer/numeric.hpp"

namespace edge_placer {

std::string_view to_string(BoundKind k) { return k == BoundKind::CostCap ? "cost_cap" : "deadline"; }

std::optional<BoundKind> parse_bound_kind(std::string_view s) {
  if (s == "cost_cap") return BoundKind::CostCap;
  if (s == "deadline") return BoundKind::Deadline;
  return std::nullopt;
}

ResidualState ResidualState::fresh(const Topology& topology) {
  ResidualState s;
  for (const DeviceNode& d : topology.devices()) s.devices_.emplace(d.id, d.capacity);
  for (const Link& l : topology.links()) s.links_.emplace(l.id, l.bandwidth_capacity);
  return s;
}

double ResidualState::device_residual(std::string_view device_id) const {
  auto it = devices_.find(device_id);
  if (it == devices_.end()) throw ValidationError("no residual for device '" + std::string(device_id) + "'");
  return it->second;
}

double ResidualState::link_residual(std::string_view link_id) const {
  auto it = links_.find(link_id);
  if (it == links_.end()) throw ValidationError("no residual for link '" + std::string(link_id) + "'");
  return it->second;
}

void ResidualState::set_device_residual(std::string_view device_id, double value) {
  auto it = devices_.find(device_id);
  if (it == devices_.end()) throw ValidationError("no residual for device '" + std::string(device_id) + "'");
  it->second = value;
}

void ResidualState::set_link_residual(std::string_view link_id, double value) {
  auto it = links_.find(link_id);
  if (it == links_.end()) throw ValidationError("no residual for link '" + std::string(link_id) + "'");
  it->second = value;
}

namespace {

// Residual after taking `demand`; values within tolerance below zero clamp to 0.
double take(double residual, double demand, const std::string& what) {
  if (!approx_le(demand, residual))
    throw ValidationError("placement over-commits " + what + " (demand " + format_roundtrip(demand) +
                          ", residual " + format_roundtrip(residual) + ")");
  double left = residual - demand;
  return left < 0.0 ? 0.0 : left;
}

}  // namespace

void ResidualState::apply(const Placement& placement) {
  // Check everything before mutating so a failure leaves the state intact.
  double dev_left = take(device_residual(placement.device_id), placement.resource_demand,
                         "device '" + placement.device_id + "'");
  std::vector<double> link_left;
  link_left.reserve(placement.path.size());
  for (const std::string& l : placement.path)
    link_left.push_back(take(link_residual(l), placement.bandwidth_demand, "link '" + l + "'"));

  devices_.find(placement.device_id)->second = dev_left;
  for (std::size_t i = 0; i < placement.path.size(); ++i) links_.find(placement.path[i])->second = link_left[i];
  placements_.push_back(placement);
}

ResidualState apply_placement(ResidualState state, const Placement& placement) {
  state.apply(placement);
  return state;
}

}  // namespace edge_placer
