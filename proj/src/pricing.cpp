#include "edge_placer/pricing.hpp"

#include <set>

#include "edge_placer/numeric.hpp"

namespace edge_placer {

const AppVariant* AppType::variant_for(DeviceClass c) const {
  for (const AppVariant& v : variants)
    if (v.device_class == c) return &v;
  return nullptr;
}

void check_app(const AppType& app) {
  const std::string who = "app '" + app.name + "'";
  if (app.variants.empty()) throw ValidationError(who + " has no variants");
  if (!(app.transfer_data_size >= 0.0)) throw ValidationError(who + ": transfer data size must be >= 0");
  if (!(app.bandwidth_demand > 0.0)) throw ValidationError(who + ": bandwidth demand must be > 0");
  std::set<DeviceClass> seen;
  for (const AppVariant& v : app.variants) {
    if (!seen.insert(v.device_class).second)
      throw ValidationError(who + " has two " + std::string(to_string(v.device_class)) + " variants");
    if (!(v.processing_time > 0.0)) throw ValidationError(who + ": processing time must be > 0");
    if (!(v.resource_demand > 0.0)) throw ValidationError(who + ": resource demand must be > 0");
  }
}

CandidatePlacement make_candidate(const Topology& topology, const AppType& app, const AppVariant& variant,
                                  const DeviceNode& device, std::string_view input_node_id) {
  if (variant.device_class != device.device_class)
    throw ValidationError("variant class " + std::string(to_string(variant.device_class)) + " cannot run on device '" +
                          device.id + "'");
  CandidatePlacement c{&app, &variant, &device, {}};
  for (const std::string& l : uplink_path(topology, input_node_id, device.site_id)) c.path.push_back(&topology.link(l));
  return c;
}

double transfer_time(double data_size, double bandwidth) {
  if (!(bandwidth > 0.0)) throw ValidationError("transfer bandwidth must be > 0");
  return 8.0 * data_size / bandwidth;
}

double response_time(const CandidatePlacement& c) {
  double per_link = transfer_time(c.app->transfer_data_size, c.app->bandwidth_demand);
  return c.variant->processing_time + static_cast<double>(c.path.size()) * per_link;
}

double price(const CandidatePlacement& c) {
  double total = c.device->full_cost * (c.variant->resource_demand / c.device->capacity);
  for (const Link* l : c.path) total += l->monthly_cost * (c.app->bandwidth_demand / l->bandwidth_capacity);
  return total;
}

bool fits(const CandidatePlacement& c, const ResidualState& residuals) {
  bool ok = approx_le(c.variant->resource_demand, residuals.device_residual(c.device->id));
  // Keep scanning after a miss so unknown link ids always surface as errors.
  for (const Link* l : c.path) ok = approx_le(c.app->bandwidth_demand, residuals.link_residual(l->id)) && ok;
  return ok;
}

}  // namespace edge_placer
