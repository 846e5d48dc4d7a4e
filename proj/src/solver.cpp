#include "edge_placer/solver.hpp"

#include <limits>

#include "edge_placer/numeric.hpp"

namespace edge_placer {

void check_requirement(const Requirement& r) {
  if (r.bounds.empty()) throw ValidationError("requirement ladder is empty");
  for (std::size_t i = 0; i < r.bounds.size(); ++i) {
    if (!(r.bounds[i] > 0.0)) throw ValidationError("requirement bounds must be positive");
    if (i > 0 && !(r.bounds[i] > r.bounds[i - 1]))
      throw ValidationError("requirement bounds must be strictly increasing");
  }
}

namespace {

void check_request(const PlacementRequest& request, const Bound& bound) {
  if (request.app == nullptr) throw ValidationError("request " + std::to_string(request.id) + " has no app");
  if (request.app->variants.empty()) throw ValidationError("app '" + request.app->name + "' has no variants");
  if (bound.kind != request.requirement.kind)
    throw ValidationError("bound kind does not match the requirement of request " + std::to_string(request.id));
}

}  // namespace

std::vector<CandidatePlacement> reachable_candidates(const Topology& topology, const PlacementRequest& request) {
  if (request.app == nullptr) throw ValidationError("request " + std::to_string(request.id) + " has no app");
  if (request.app->variants.empty()) throw ValidationError("app '" + request.app->name + "' has no variants");

  // Path links accumulate as we climb, so each site's path is its prefix.
  std::vector<CandidatePlacement> out;
  std::vector<const Link*> path;
  for (const Site* site : topology.root_path(request.input_node)) {
    for (const std::string& dev_id : site->devices) {
      const DeviceNode& dev = topology.device(dev_id);
      if (const AppVariant* v = request.app->variant_for(dev.device_class))
        out.push_back({request.app, v, &dev, path});
    }
    if (const Link* up = topology.uplink_of(site->id)) path.push_back(up);
  }
  return out;
}

std::vector<CandidatePlacement> feasible_candidates(const Topology& topology, const ResidualState& state,
                                                    const PlacementRequest& request, const Bound& bound) {
  check_request(request, bound);
  std::vector<CandidatePlacement> out;
  for (CandidatePlacement& c : reachable_candidates(topology, request)) {
    if (!fits(c, state)) continue;
    double metric = bound.kind == BoundKind::CostCap ? price(c) : response_time(c);
    if (approx_le(metric, bound.value)) out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::size_t> select_best(const std::vector<CandidatePlacement>& candidates, BoundKind kind) {
  if (candidates.empty()) return std::nullopt;

  std::vector<double> primary, secondary;
  for (const CandidatePlacement& c : candidates) {
    double rt = response_time(c), p = price(c);
    primary.push_back(kind == BoundKind::CostCap ? rt : p);
    secondary.push_back(kind == BoundKind::CostCap ? p : rt);
  }

  // Successive filtering keeps the result independent of candidate order.
  auto keep_min = [](const std::vector<std::size_t>& in, const std::vector<double>& metric) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i : in) best = std::min(best, metric[i]);
    std::vector<std::size_t> out;
    for (std::size_t i : in)
      if (approx_le(metric[i], best)) out.push_back(i);
    return out;
  };

  std::vector<std::size_t> pool(candidates.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  pool = keep_min(pool, primary);
  pool = keep_min(pool, secondary);

  std::size_t best = pool.front();
  for (std::size_t i : pool) {
    const DeviceNode& a = *candidates[i].device;
    const DeviceNode& b = *candidates[best].device;
    if (index_of(a.tier) < index_of(b.tier) || (a.tier == b.tier && a.id < b.id)) best = i;
  }
  return best;
}

Placement to_placement(const CandidatePlacement& c, std::uint64_t request_id, const Bound& bound) {
  Placement p;
  p.request_id = request_id;
  p.app = c.app->name;
  p.device_id = c.device->id;
  p.tier = c.device->tier;
  p.variant_class = c.variant->device_class;
  for (const Link* l : c.path) p.path.push_back(l->id);
  p.resource_demand = c.variant->resource_demand;
  p.bandwidth_demand = c.app->bandwidth_demand;
  p.response_time = response_time(c);
  p.price = price(c);
  p.granted_bound = bound;
  return p;
}

std::optional<Placement> solve_request(const Topology& topology, const ResidualState& state,
                                       const PlacementRequest& request, const Bound& bound) {
  auto candidates = feasible_candidates(topology, state, request, bound);
  auto best = select_best(candidates, bound.kind);
  if (!best) return std::nullopt;
  return to_placement(candidates[*best], request.id, bound);
}

RequestOutcome solve_with_escalation(const Topology& topology, const ResidualState& state,
                                     const PlacementRequest& request) {
  check_requirement(request.requirement);
  for (std::size_t i = 0; i < request.requirement.bounds.size(); ++i) {
    if (auto p = solve_request(topology, state, request, request.requirement.at(i))) return *p;
  }
  return Rejection{request.id, request.app ? request.app->name : std::string{}, request.requirement.kind};
}

}  // namespace edge_placer
