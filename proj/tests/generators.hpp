#pragma once

// Random small instances for property tests. Values are drawn from coarse
// grids so that exact ties between candidates are common.

#include <random>
#include <string>
#include <vector>

#include "edge_placer/model.hpp"
#include "edge_placer/pricing.hpp"
#include "edge_placer/scenario.hpp"
#include "edge_placer/solver.hpp"

namespace gen {

using namespace edge_placer;

struct Instance {
  Topology topology;
  AppType app;
  ResidualState state;
  std::string input;
  Bound bound;
};

inline int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Topology random_topology(std::mt19937_64& rng, int max_devices = 12) {
  std::vector<Site> sites;
  std::vector<Link> links;
  std::vector<InputNode> inputs;
  const int n_carrier = pick(rng, 1, 2);
  const int n_user = pick(rng, n_carrier, 3);
  sites.push_back({"cl0", Tier::Cloud, {}});
  for (int c = 0; c < n_carrier; ++c) {
    sites.push_back({"ce" + std::to_string(c), Tier::CarrierEdge, {}});
    links.push_back({"ce" + std::to_string(c) + "_up", "ce" + std::to_string(c), "cl0", double(pick(rng, 2, 10)),
                     double(pick(rng, 0, 4) * 1000)});
  }
  for (int u = 0; u < n_user; ++u) {
    std::string id = "ue" + std::to_string(u), parent = "ce" + std::to_string(u % n_carrier);
    sites.push_back({id, Tier::UserEdge, {}});
    links.push_back({id + "_up", id, parent, double(pick(rng, 2, 10)), double(pick(rng, 0, 4) * 1000)});
    inputs.push_back({"in" + std::to_string(u), id});
  }

  std::vector<DeviceNode> devices;
  const int n_dev = pick(rng, 1, max_devices);
  for (int i = 0; i < n_dev; ++i) {
    Site& s = sites[pick(rng, 0, static_cast<int>(sites.size()) - 1)];
    DeviceNode d;
    d.id = "d" + std::to_string(10 + i);
    d.site_id = s.id;
    d.tier = s.tier;
    d.device_class = kAllDeviceClasses[pick(rng, 0, 2)];
    d.capacity = pick(rng, 1, 8);
    d.full_cost = pick(rng, 0, 8) * 1000.0;
    s.devices.push_back(d.id);
    devices.push_back(d);
  }
  return Topology(std::move(sites), std::move(devices), std::move(links), std::move(inputs));
}

inline AppType random_app(std::mt19937_64& rng) {
  AppType app;
  app.name = "app";
  app.transfer_data_size = pick(rng, 0, 4) * 0.5;
  app.bandwidth_demand = pick(rng, 1, 4);
  for (DeviceClass c : kAllDeviceClasses) {
    if (pick(rng, 0, 2) == 0 && !app.variants.empty()) continue;
    app.variants.push_back({c, double(pick(rng, 1, 6)), double(pick(rng, 1, 4))});
  }
  return app;
}

// Consumes a random part of each residual.
inline ResidualState random_state(std::mt19937_64& rng, const Topology& t) {
  ResidualState s = ResidualState::fresh(t);
  for (const DeviceNode& d : t.devices())
    if (pick(rng, 0, 2) == 0) s.set_device_residual(d.id, pick(rng, 0, static_cast<int>(d.capacity)));
  for (const Link& l : t.links())
    if (pick(rng, 0, 2) == 0) s.set_link_residual(l.id, pick(rng, 0, static_cast<int>(l.bandwidth_capacity)));
  return s;
}

inline Instance random_instance(std::mt19937_64& rng) {
  Instance inst{random_topology(rng), random_app(rng), {}, {}, {}};
  inst.state = random_state(rng, inst.topology);
  const auto& inputs = inst.topology.input_nodes();
  inst.input = inputs[pick(rng, 0, static_cast<int>(inputs.size()) - 1)].id;
  if (pick(rng, 0, 1) == 0) inst.bound = {BoundKind::CostCap, pick(rng, 1, 20) * 500.0};
  else inst.bound = {BoundKind::Deadline, pick(rng, 2, 24) * 0.5};
  return inst;
}

inline PlacementRequest request_for(const Instance& inst, std::uint64_t id = 1) {
  return {id, &inst.app, inst.input, {inst.bound.kind, {inst.bound.value}}};
}

}  // namespace gen
