#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edge_placer/model.hpp"
#include "edge_placer/pricing.hpp"
#include "edge_placer/state.hpp"

namespace edge_placer {

/// A requirement ladder, tightest bound first. Pattern 1 requests carry a
/// single bound.
struct Requirement {
  BoundKind kind = BoundKind::CostCap;
  std::vector<double> bounds;

  Bound at(std::size_t i) const { return {kind, bounds.at(i)}; }
  bool operator==(const Requirement&) const = default;
};

/// Throws ValidationError unless bounds are non-empty, positive and strictly increasing.
void check_requirement(const Requirement& r);

struct PlacementRequest {
  std::uint64_t id = 0;
  const AppType* app = nullptr;  // into the scenario's app catalog
  std::string input_node;
  Requirement requirement;
};

struct Rejection {
  std::uint64_t request_id = 0;
  std::string app;
  BoundKind kind = BoundKind::CostCap;
  std::string reason = "no-feasible-candidate";

  bool operator==(const Rejection&) const = default;
};

using RequestOutcome = std::variant<Placement, Rejection>;

inline const Placement* placed(const RequestOutcome& o) { return std::get_if<Placement>(&o); }

/// Every reachable (device, matching variant) pair that fits the residuals and
/// satisfies `bound`, in topology device order.
std::vector<CandidatePlacement> feasible_candidates(const Topology& topology, const ResidualState& state,
                                                    const PlacementRequest& request, const Bound& bound);

/// Every reachable (device, matching variant) pair, ignoring capacity and bound.
std::vector<CandidatePlacement> reachable_candidates(const Topology& topology, const PlacementRequest& request);

/// Index of the preferred candidate: minimal objective (response time under a
/// cost cap, price under a deadline), then the other metric, then the tier
/// closest to the user, then the smallest device id. Ties use kTolerance.
/// Returns nullopt for an empty list.
std::optional<std::size_t> select_best(const std::vector<CandidatePlacement>& candidates, BoundKind kind);

/// The optimal placement under `bound`, or nullopt if nothing is feasible.
std::optional<Placement> solve_request(const Topology& topology, const ResidualState& state,
                                       const PlacementRequest& request, const Bound& bound);

/// Tries the ladder in order; the first bound admitting a placement wins.
RequestOutcome solve_with_escalation(const Topology& topology, const ResidualState& state,
                                     const PlacementRequest& request);

/// Materializes a candidate as a Placement granted under `bound`.
Placement to_placement(const CandidatePlacement& candidate, std::uint64_t request_id, const Bound& bound);

}  // namespace edge_placer
