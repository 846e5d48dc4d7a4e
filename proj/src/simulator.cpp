#include "edge_placer/simulator.hpp"

namespace edge_placer {

std::optional<Pattern> pattern_from_int(int n) {
  if (n >= 1 && n <= 3) return static_cast<Pattern>(n);
  return std::nullopt;
}

std::vector<Requirement> single_bound_menu(const AppProfile& app) {
  std::vector<Requirement> menu;
  for (double b : app.price_ladder) menu.push_back({BoundKind::CostCap, {b}});
  for (double b : app.deadline_ladder) menu.push_back({BoundKind::Deadline, {b}});
  return menu;
}

std::vector<PlacementRequest> generate_requests(const Scenario& scenario, const Topology& topology, Pattern pattern,
                                                std::size_t n, std::uint64_t seed) {
  std::vector<PlacementRequest> out;
  if (n == 0) return out;

  if (scenario.apps.empty()) throw ValidationError("scenario has no apps");
  if (topology.input_nodes().empty()) throw ValidationError("scenario has no input nodes");

  double total = 0.0;
  for (const AppProfile& a : scenario.apps) total += a.mix_weight;
  if (!(total > 0.0)) throw ValidationError("app mix weights sum to zero");
  std::vector<double> threshold;
  double cum = 0.0;
  for (const AppProfile& a : scenario.apps) threshold.push_back((cum += a.mix_weight) / total);

  std::vector<std::vector<Requirement>> menus;
  for (const AppProfile& a : scenario.apps) {
    std::vector<Requirement> menu;
    switch (pattern) {
      case Pattern::Pattern1: menu = single_bound_menu(a); break;
      case Pattern::Pattern2:
        if (!a.price_ladder.empty()) menu.push_back({BoundKind::CostCap, a.price_ladder});
        break;
      case Pattern::Pattern3:
        if (!a.deadline_ladder.empty()) menu.push_back({BoundKind::Deadline, a.deadline_ladder});
        break;
    }
    // Only apps that can actually be drawn need a menu.
    if (menu.empty() && a.mix_weight > 0.0)
      throw ValidationError("app '" + a.app.name + "' has an empty request menu for pattern " +
                            std::to_string(to_int(pattern)));
    menus.push_back(std::move(menu));
  }

  SplitMix64 rng(seed);
  const std::size_t n_inputs = topology.input_nodes().size();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.next_double();
    std::size_t app = 0;
    // Zero-weight apps own empty intervals and are never selected.
    while (app + 1 < threshold.size() && !(u < threshold[app])) ++app;

    PlacementRequest r;
    r.id = i + 1;
    r.app = &scenario.apps[app].app;
    r.input_node = topology.input_nodes()[rng.next() % n_inputs].id;
    const auto& menu = menus[app];
    if (pattern == Pattern::Pattern1) r.requirement = menu[rng.next() % menu.size()];
    else r.requirement = menu.front();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PlacementRequest> generate_requests(const Scenario& scenario, Pattern pattern, std::size_t n,
                                                std::uint64_t seed) {
  return generate_requests(scenario, build_topology(scenario), pattern, n, seed);
}

Trace run_requests(const Topology& topology, std::span<const PlacementRequest> requests) {
  Trace trace;
  trace.final_state = ResidualState::fresh(topology);
  trace.outcomes.reserve(requests.size());
  for (const PlacementRequest& r : requests) {
    RequestOutcome outcome = solve_with_escalation(topology, trace.final_state, r);
    if (const Placement* p = placed(outcome)) trace.final_state.apply(*p);
    trace.outcomes.push_back(std::move(outcome));
  }
  return trace;
}

Trace run_simulation(const Scenario& scenario, const Topology& topology, Pattern pattern, std::size_t n,
                     std::uint64_t seed) {
  auto requests = generate_requests(scenario, topology, pattern, n, seed);
  Trace trace = run_requests(topology, requests);
  trace.scenario_hash = scenario_hash(scenario);
  trace.pattern = pattern;
  trace.seed = seed;
  return trace;
}

Trace run_simulation(const Scenario& scenario, Pattern pattern, std::size_t n, std::uint64_t seed) {
  return run_simulation(scenario, build_topology(scenario), pattern, n, seed);
}

ResidualState replay(const Topology& topology, std::span<const RequestOutcome> outcomes) {
  ResidualState state = ResidualState::fresh(topology);
  for (const RequestOutcome& o : outcomes)
    if (const Placement* p = placed(o)) state.apply(*p);
  return state;
}

MetricsSeries compute_metrics(std::span<const RequestOutcome> outcomes) {
  MetricsSeries m;
  m.requests = outcomes.size();
  double sum_response = 0.0;
  double sum_price = 0.0;
  std::array<std::size_t, 3> tiers{};
  for (const RequestOutcome& o : outcomes) {
    const Placement* p = placed(o);
    if (!p) {
      ++m.rejections;
      continue;
    }
    sum_response += p->response_time;
    sum_price += p->price;
    ++tiers[index_of(p->tier)];
    MetricsPoint pt;
    pt.placement_index = m.points.size() + 1;
    pt.request_id = p->request_id;
    pt.running_avg_response = sum_response / static_cast<double>(pt.placement_index);
    pt.tier_counts = tiers;
    pt.rejections = m.rejections;
    pt.cumulative_price = sum_price;
    m.points.push_back(pt);
  }
  return m;
}

}  // namespace edge_placer
