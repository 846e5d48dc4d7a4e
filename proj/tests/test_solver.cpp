#include <doctest.h>

#include <random>
#include <set>

#include "edge_placer/scenario.hpp"
#include "edge_placer/solver.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace edge_placer;

namespace {

struct PaperFixture {
  Scenario scenario = paper_scenario();
  Topology topology = build_topology(scenario);
  ResidualState state = ResidualState::fresh(topology);
  const AppType& ft = scenario.find_app("NAS.FT")->app;

  PlacementRequest request(BoundKind kind, std::vector<double> bounds, const std::string& input = "in000") {
    return {1, &ft, input, {kind, std::move(bounds)}};
  }
};

std::set<std::string> device_ids(const std::vector<CandidatePlacement>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.device->id);
  return out;
}

Topology scale_costs(const Topology& t, double lambda) {
  auto devices = t.devices();
  auto links = t.links();
  for (auto& d : devices) d.full_cost *= lambda;
  for (auto& l : links) l.monthly_cost *= lambda;
  return Topology(t.sites(), devices, links, t.input_nodes());
}

}  // namespace

TEST_CASE("feasible_candidates on the fresh paper topology") {
  PaperFixture f;
  auto cap = f.request(BoundKind::CostCap, {7000});
  CHECK(device_ids(feasible_candidates(f.topology, f.state, cap, {BoundKind::CostCap, 7000})) ==
        std::set<std::string>{"cl000_gpu00", "cl000_gpu01", "cl000_gpu02", "cl000_gpu03"});

  auto deadline = f.request(BoundKind::Deadline, {6});
  CHECK(device_ids(feasible_candidates(f.topology, f.state, deadline, {BoundKind::Deadline, 6})) ==
        std::set<std::string>{"ue000_gpu00"});

  AppType huge{"huge", 0.1, 1.0, {{DeviceClass::GPU, 1.0, 1000.0}, {DeviceClass::CPU, 1.0, 1000.0}}};
  PlacementRequest r{1, &huge, "in000", {BoundKind::CostCap, {1e12}}};
  CHECK(feasible_candidates(f.topology, f.state, r, {BoundKind::CostCap, 1e12}).empty());
}

TEST_CASE("feasible_candidates input errors") {
  PaperFixture f;
  AppType none{"none", 0.1, 1.0, {}};
  PlacementRequest r{1, &none, "in000", {BoundKind::CostCap, {1000}}};
  CHECK_THROWS_AS(feasible_candidates(f.topology, f.state, r, {BoundKind::CostCap, 1000}), ValidationError);
  auto cap = f.request(BoundKind::CostCap, {7000});
  CHECK_THROWS_AS(feasible_candidates(f.topology, f.state, cap, {BoundKind::Deadline, 7}), ValidationError);
}

TEST_CASE("solve_request picks the optimum") {
  PaperFixture f;
  auto p = solve_request(f.topology, f.state, f.request(BoundKind::CostCap, {8500}), {BoundKind::CostCap, 8500});
  REQUIRE(p);
  CHECK(p->tier == Tier::CarrierEdge);
  CHECK(p->device_id == "ce000_gpu00");
  CHECK(std::fabs(p->response_time - 6.6) <= 1e-9);
  CHECK(std::fabs(p->price - (7812.5 + 10000.0 / 30.0)) <= 1e-9);

  auto d = solve_request(f.topology, f.state, f.request(BoundKind::Deadline, {7}), {BoundKind::Deadline, 7});
  REQUIRE(d);
  CHECK(d->device_id == "ce000_gpu00");
  CHECK(std::fabs(d->price - (7812.5 + 10000.0 / 30.0)) <= 1e-9);

  CHECK_FALSE(solve_request(f.topology, f.state, f.request(BoundKind::CostCap, {5000}), {BoundKind::CostCap, 5000}));
}

TEST_CASE("solve_with_escalation walks the ladder") {
  PaperFixture f;
  auto ladder = f.request(BoundKind::CostCap, {7000, 8500, 10000});

  auto fresh = solve_with_escalation(f.topology, f.state, ladder);
  REQUIRE(placed(fresh));
  CHECK(placed(fresh)->granted_bound == Bound{BoundKind::CostCap, 7000});
  CHECK(*placed(fresh) == *solve_request(f.topology, f.state, ladder, {BoundKind::CostCap, 7000}));

  for (int g = 0; g < 4; ++g) f.state.set_device_residual("cl000_gpu0" + std::to_string(g), 0.0);
  auto escalated = solve_with_escalation(f.topology, f.state, ladder);
  REQUIRE(placed(escalated));
  CHECK(placed(escalated)->granted_bound == Bound{BoundKind::CostCap, 8500});
  CHECK(placed(escalated)->tier == Tier::CarrierEdge);

  for (const DeviceNode& d : f.topology.devices())
    if (d.device_class == DeviceClass::GPU) f.state.set_device_residual(d.id, 0.0);
  auto rejected = solve_with_escalation(f.topology, f.state, ladder);
  REQUIRE(std::holds_alternative<Rejection>(rejected));
  CHECK(std::get<Rejection>(rejected).reason == "no-feasible-candidate");

  PlacementRequest bad = ladder;
  bad.requirement.bounds = {8500, 7000};
  CHECK_THROWS_AS(solve_with_escalation(f.topology, f.state, bad), ValidationError);
}

TEST_CASE("tie-break prefers the smallest device id within a site") {
  PaperFixture f;
  f.state.set_device_residual("cl000_gpu00", 0.5);
  auto p = solve_request(f.topology, f.state, f.request(BoundKind::CostCap, {7000}), {BoundKind::CostCap, 7000});
  REQUIRE(p);
  CHECK(p->device_id == "cl000_gpu01");
}

TEST_CASE("apply_placement bookkeeping") {
  PaperFixture f;
  auto p = solve_request(f.topology, f.state, f.request(BoundKind::CostCap, {7000}), {BoundKind::CostCap, 7000});
  REQUIRE(p);
  ResidualState after = apply_placement(f.state, *p);
  CHECK(after.device_residual("cl000_gpu00") == 15.0);
  CHECK(after.link_residual("ue000_up") == 28.0);
  CHECK(after.link_residual("ce000_up") == 98.0);
  CHECK(after.placements().size() == 1);

  ResidualState s = f.state;
  s.set_device_residual("cl000_gpu00", 0.5);
  const ResidualState before = s;
  CHECK_THROWS_AS(s.apply(*p), ValidationError);
  CHECK(s == before);
}

TEST_CASE("solver agrees with the brute-force oracle on random instances") {
  std::mt19937_64 rng(2024);
  int placed_count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    gen::Instance inst = gen::random_instance(rng);
    auto got = solve_request(inst.topology, inst.state, gen::request_for(inst), inst.bound);
    auto want = oracle::brute_force(inst.topology, inst.state, inst.app, inst.input, inst.bound.kind, inst.bound.value);
    REQUIRE(got.has_value() == want.has_value());
    if (!got) continue;
    ++placed_count;
    CHECK(got->device_id == want->device_id);
    CHECK(got->variant_class == want->device_class);
    CHECK(std::fabs(got->response_time - want->response_time) <= 1e-9);
    CHECK(std::fabs(got->price - want->price) <= 1e-9);
  }
  CHECK(placed_count > 200);
}

TEST_CASE("escalation is monotone and admissions are honest") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    gen::Instance inst = gen::random_instance(rng);
    PlacementRequest req = gen::request_for(inst);
    const Bound tight = inst.bound;
    const Bound loose{tight.kind, tight.value * 1.5};
    auto tight_set = device_ids(feasible_candidates(inst.topology, inst.state, req, tight));
    auto loose_set = device_ids(feasible_candidates(inst.topology, inst.state, req, loose));
    CHECK(std::includes(loose_set.begin(), loose_set.end(), tight_set.begin(), tight_set.end()));
    if (solve_request(inst.topology, inst.state, req, tight))
      CHECK(solve_request(inst.topology, inst.state, req, loose).has_value());

    req.requirement.bounds = {tight.value, loose.value};
    const RequestOutcome outcome = solve_with_escalation(inst.topology, inst.state, req);
    if (const Placement* p = placed(outcome)) {
      double metric = p->granted_bound.kind == BoundKind::CostCap ? p->price : p->response_time;
      CHECK(metric <= p->granted_bound.value + 1e-9);
      ResidualState after = apply_placement(inst.state, *p);
      for (const auto& [id, r] : after.device_residuals()) CHECK(r >= 0.0);
      for (const auto& [id, r] : after.link_residuals()) CHECK(r >= 0.0);
    }
  }
}

TEST_CASE("no chosen candidate is dominated by a feasible alternative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    gen::Instance inst = gen::random_instance(rng);
    PlacementRequest req = gen::request_for(inst);
    auto p = solve_request(inst.topology, inst.state, req, inst.bound);
    if (!p) continue;
    for (const CandidatePlacement& c : feasible_candidates(inst.topology, inst.state, req, inst.bound)) {
      bool faster = response_time(c) < p->response_time - 1e-9;
      bool cheaper = price(c) < p->price - 1e-9;
      bool not_costlier = price(c) <= p->price + 1e-9;
      bool not_slower = response_time(c) <= p->response_time + 1e-9;
      bool dominated = (faster && not_costlier) || (cheaper && not_slower);
      CHECK_FALSE(dominated);
    }
  }
}

TEST_CASE("offload-or-not: a 1.5x faster variant at twice the price loses under a deadline") {
  Scenario demo = cost_performance_demo_scenario();
  Topology t = build_topology(demo);
  ResidualState s = ResidualState::fresh(t);
  const AppType& a = demo.find_app("A")->app;
  const AppType& b = demo.find_app("B")->app;

  auto pa = solve_request(t, s, {1, &a, "in000", {BoundKind::Deadline, {12}}}, {BoundKind::Deadline, 12});
  REQUIRE(pa);
  CHECK(pa->variant_class == DeviceClass::CPU);
  CHECK(std::fabs(pa->price - 1000.0) <= 1e-9);

  auto pb = solve_request(t, s, {2, &b, "in000", {BoundKind::CostCap, {2000}}}, {BoundKind::CostCap, 2000});
  REQUIRE(pb);
  CHECK(pb->variant_class == DeviceClass::GPU);

  auto pa7 = solve_request(t, s, {3, &a, "in000", {BoundKind::Deadline, {7}}}, {BoundKind::Deadline, 7});
  REQUIRE(pa7);
  CHECK(pa7->variant_class == DeviceClass::GPU);
}

TEST_CASE("argmin is invariant under cost scaling") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    gen::Instance inst = gen::random_instance(rng);
    Topology scaled = scale_costs(inst.topology, 7.0);
    Bound bound = inst.bound;
    if (bound.kind == BoundKind::CostCap) bound.value *= 7.0;
    PlacementRequest req = gen::request_for(inst);
    req.requirement.bounds = {bound.value};
    auto a = solve_request(inst.topology, inst.state, gen::request_for(inst), inst.bound);
    auto b = solve_request(scaled, inst.state, req, bound);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(a->device_id == b->device_id);
  }
}
