#pragma once

#include <string>
#include <vector>

#include "edge_placer/model.hpp"
#include "edge_placer/state.hpp"

namespace edge_placer {

/// One executable form of an application for a device class.
struct AppVariant {
  DeviceClass device_class = DeviceClass::CPU;
  double processing_time = 0.0;  // seconds on a device of this class
  double resource_demand = 0.0;  // resource-units held on the device

  bool operator==(const AppVariant&) const = default;
};

struct AppType {
  std::string name;
  double transfer_data_size = 0.0;  // MB (10^6 bytes)
  double bandwidth_demand = 0.0;    // Mbps (10^6 bit/s)
  std::vector<AppVariant> variants;

  const AppVariant* variant_for(DeviceClass c) const;

  bool operator==(const AppType&) const = default;
};

/// Throws ValidationError when the app violates its invariants.
void check_app(const AppType& app);

/// A (variant, device) choice for one app. The path is the uplink chain from
/// the requesting input's user edge to the device's site. Pointers refer into
/// the caller's topology and app catalog.
struct CandidatePlacement {
  const AppType* app = nullptr;
  const AppVariant* variant = nullptr;
  const DeviceNode* device = nullptr;
  std::vector<const Link*> path;
};

/// Builds the candidate for `device`, resolving the path from `input_node_id`.
/// Throws ValidationError if classes mismatch or the device is unreachable.
CandidatePlacement make_candidate(const Topology& topology, const AppType& app, const AppVariant& variant,
                                  const DeviceNode& device, std::string_view input_node_id);

/// Seconds to move `data_size` MB over `bandwidth` Mbps.
double transfer_time(double data_size, double bandwidth);

// Processing time plus one transfer term per path link. The transfer term
// uses the app's bandwidth demand, so it is the same on every link.
double response_time(const CandidatePlacement& candidate);

// Device share a * (demand / capacity) plus, per link, b * (bandwidth / link capacity).
double price(const CandidatePlacement& candidate);

/// Whether the device and every path link still have room for the app.
bool fits(const CandidatePlacement& candidate, const ResidualState& residuals);

}  // namespace edge_placer
