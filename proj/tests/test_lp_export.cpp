#include <doctest.h>

#include <random>

#include "edge_placer/lp_export.hpp"
#include "edge_placer/numeric.hpp"
#include "edge_placer/scenario.hpp"
#include "edge_placer/solver.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace edge_placer;

namespace {

Topology one_device_topology() {
  std::vector<Site> sites{{"cl0", Tier::Cloud, {"g0"}}, {"ce0", Tier::CarrierEdge, {}}, {"ue0", Tier::UserEdge, {}}};
  std::vector<DeviceNode> devices{{"g0", "cl0", Tier::Cloud, DeviceClass::GPU, 16.0, 100000.0}};
  std::vector<Link> links{{"ce0_up", "ce0", "cl0", 100.0, 8000.0}, {"ue0_up", "ue0", "ce0", 30.0, 5000.0}};
  return Topology(sites, devices, links, {{"in0", "ue0"}});
}

const AppType kFt{"NAS.FT", 0.2, 2.0, {{DeviceClass::GPU, 5.8, 1.0}, {DeviceClass::CPU, 29.0, 100.0}}};

}  // namespace

TEST_CASE("single device model has one variable and one row per path link") {
  Topology t = one_device_topology();
  ResidualState s = ResidualState::fresh(t);
  PlacementRequest r{1, &kFt, "in0", {BoundKind::CostCap, {7000}}};
  IlpModel m = build_ilp(t, s, r, r.requirement.at(0));
  CHECK(m.binaries == std::vector<std::string>{"x_g0_gpu"});
  REQUIRE(m.rows.size() == 5);
  CHECK(m.rows[0].name == "choice");
  CHECK(m.rows[1].name == "price_cap");
  CHECK(m.rows[2].name == "dev_g0");
  CHECK(m.rows[3].name == "link_ce0_up");
  CHECK(m.rows[4].name == "link_ue0_up");

  const std::string text = to_lp_text(m);
  CHECK(oracle::lp_grammar_problem(text).empty());
  CHECK(text ==
        "Minimize\n"
        " obj: 7.4 x_g0_gpu\n"
        "Subject To\n"
        " choice: 1 x_g0_gpu = 1\n"
        " price_cap: " + format_roundtrip(6250.0 + 5000.0 * 2 / 30 + 160.0) + " x_g0_gpu <= 7000\n"
        " dev_g0: 1 x_g0_gpu <= 16\n"
        " link_ce0_up: 2 x_g0_gpu <= 100\n"
        " link_ue0_up: 2 x_g0_gpu <= 30\n"
        "Binary\n"
        " x_g0_gpu\n"
        "End\n");
}

TEST_CASE("paper topology model for one NAS.FT request") {
  Scenario sc = paper_scenario();
  Topology t = build_topology(sc);
  ResidualState s = ResidualState::fresh(t);
  PlacementRequest r{1, &sc.find_app("NAS.FT")->app, "in000", {BoundKind::Deadline, {6, 7, 10}}};
  IlpModel m = build_ilp(t, s, r, r.requirement.at(0));
  // CPU and GPU devices on the three root-path sites: (8+4) + (4+2) + (2+1).
  CHECK(m.binaries.size() == 21);
  CHECK(std::is_sorted(m.binaries.begin(), m.binaries.end()));

  oracle::LpText lp = oracle::parse_lp(to_lp_text(m));
  CHECK(oracle::has_one_hot_row(lp));
  auto opt = oracle::solve_one_hot(lp);
  REQUIRE(opt);
  CHECK(opt->variable == "x_ue000_gpu00_gpu");
  CHECK(std::fabs(opt->objective - 9375.0) <= 1e-9);

  CHECK(to_lp_text(build_ilp(t, s, r, r.requirement.at(0))) == to_lp_text(m));
  CHECK_THROWS_AS(build_ilp(t, s, r, {BoundKind::CostCap, 7000}), ValidationError);
}

TEST_CASE("saturated devices give an infeasible model") {
  Topology t = one_device_topology();
  ResidualState s = ResidualState::fresh(t);
  s.set_device_residual("g0", 0.0);
  PlacementRequest r{1, &kFt, "in0", {BoundKind::CostCap, {1e9}}};
  oracle::LpText lp = oracle::parse_lp(to_lp_text(build_ilp(t, s, r, r.requirement.at(0))));
  CHECK_FALSE(oracle::solve_one_hot(lp));
  CHECK_FALSE(solve_request(t, s, r, r.requirement.at(0)));
}

TEST_CASE("model without candidates is well-formed and infeasible") {
  Topology t = one_device_topology();
  AppType fpga_only{"f", 0.1, 1.0, {{DeviceClass::FPGA, 1.0, 1.0}}};
  PlacementRequest r{1, &fpga_only, "in0", {BoundKind::CostCap, {1e9}}};
  IlpModel m = build_ilp(t, ResidualState::fresh(t), r, r.requirement.at(0));
  CHECK(m.binaries.empty());
  const std::string text = to_lp_text(m, {"empty"});
  CHECK(text.rfind("\\ empty\n", 0) == 0);
  CHECK(oracle::lp_grammar_problem(text).empty());
  CHECK_FALSE(oracle::solve_one_hot(oracle::parse_lp(text)));
}

TEST_CASE("exported models agree with the solver on random instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    gen::Instance inst = gen::random_instance(rng);
    PlacementRequest req = gen::request_for(inst);
    const std::string text = to_lp_text(build_ilp(inst.topology, inst.state, req, inst.bound), {"trial"});
    REQUIRE(oracle::lp_grammar_problem(text) == "");
    oracle::LpText lp = oracle::parse_lp(text);
    if (!lp.binaries.empty() && lp.binaries.front() != "x_none") CHECK(oracle::has_one_hot_row(lp));

    auto lp_opt = oracle::solve_one_hot(lp);
    auto sol = solve_request(inst.topology, inst.state, req, inst.bound);
    REQUIRE(lp_opt.has_value() == sol.has_value());
    if (!sol) continue;
    const double objective = inst.bound.kind == BoundKind::CostCap ? sol->response_time : sol->price;
    CHECK(std::fabs(lp_opt->objective - objective) <= 1e-6);
  }
}
