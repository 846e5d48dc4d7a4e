#include <doctest.h>

#include <random>

#include "edge_placer/pricing.hpp"
#include "edge_placer/scenario.hpp"
#include "edge_placer/solver.hpp"
#include "generators.hpp"

using namespace edge_placer;

namespace {

struct PaperFixture {
  Scenario scenario = paper_scenario();
  Topology topology = build_topology(scenario);
  const AppType& ft = scenario.find_app("NAS.FT")->app;
  const AppType& mriq = scenario.find_app("MRI-Q")->app;

  CandidatePlacement at(const AppType& app, const std::string& device, const std::string& input = "in000") {
    const DeviceNode& d = topology.device(device);
    return make_candidate(topology, app, *app.variant_for(d.device_class), d, input);
  }
};

}  // namespace

TEST_CASE("transfer_time converts MB over Mbps") {
  CHECK(transfer_time(0.2, 2.0) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(transfer_time(0.0, 1.0) == 0.0);
  CHECK(transfer_time(0.15, 1.0) == doctest::Approx(1.2).epsilon(1e-12));
  CHECK_THROWS_AS(transfer_time(1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(transfer_time(1.0, -2.0), ValidationError);
}

TEST_CASE("response_time per tier") {
  PaperFixture f;
  CHECK(std::fabs(response_time(f.at(f.ft, "ue000_gpu00")) - 5.8) <= 1e-9);
  CHECK(std::fabs(response_time(f.at(f.ft, "ce000_gpu00")) - 6.6) <= 1e-9);
  CHECK(std::fabs(response_time(f.at(f.ft, "cl000_gpu00")) - 7.4) <= 1e-9);
  CHECK(std::fabs(response_time(f.at(f.mriq, "ce000_fpga00")) - 3.2) <= 1e-9);
  CHECK(std::fabs(response_time(f.at(f.mriq, "cl000_fpga00")) - 4.4) <= 1e-9);
  CHECK(std::fabs(response_time(f.at(f.ft, "cl000_cpu00")) - (29.0 + 1.6)) <= 1e-9);
}

TEST_CASE("price per tier") {
  PaperFixture f;
  // Device share plus per-link share of bandwidth, from the evaluation constants.
  CHECK(std::fabs(price(f.at(f.ft, "cl000_gpu00")) - (100000.0 / 16.0 + 5000.0 * 2.0 / 30.0 + 8000.0 * 2.0 / 100.0)) <=
        1e-9);
  CHECK(std::fabs(price(f.at(f.ft, "ce000_gpu00")) - (6250.0 * 1.25 + 5000.0 * 2.0 / 30.0)) <= 1e-9);
  CHECK(std::fabs(price(f.at(f.ft, "ue000_gpu00")) - 9375.0) <= 1e-9);
  CHECK(std::fabs(price(f.at(f.mriq, "cl000_fpga00")) - (12000.0 + 5000.0 / 30.0 + 80.0)) <= 1e-9);
  CHECK(std::fabs(price(f.at(f.mriq, "ce000_fpga00")) - (15000.0 + 5000.0 / 30.0)) <= 1e-9);

  AppType free_app{"free", 0.0, 1.0, {{DeviceClass::GPU, 1.0, 0.0}}};
  CHECK(price(f.at(free_app, "ue000_gpu00")) == 0.0);
}

TEST_CASE("fits honors device and link residuals inclusively") {
  PaperFixture f;
  ResidualState s = ResidualState::fresh(f.topology);
  CHECK(fits(f.at(f.ft, "cl000_gpu00"), s));

  s.set_device_residual("cl000_gpu00", 1.0);
  CHECK(fits(f.at(f.ft, "cl000_gpu00"), s));
  s.set_link_residual("ce000_up", 2.0);
  CHECK(fits(f.at(f.ft, "cl000_gpu00"), s));
  s.set_link_residual("ce000_up", 1.5);
  CHECK_FALSE(fits(f.at(f.ft, "cl000_gpu00"), s));
  // The carrier GPU path does not use the carrier uplink.
  CHECK(fits(f.at(f.ft, "ce000_gpu00"), s));

  ResidualState filled = ResidualState::fresh(f.topology);
  for (int i = 0; i < 16; ++i) {
    // Alternate user edges so the 30 Mbps uplinks are not the binding limit.
    auto c = f.at(f.ft, "cl000_gpu00", i % 2 == 0 ? "in000" : "in005");
    REQUIRE(fits(c, filled));
    filled.apply(to_placement(c, i + 1, {BoundKind::CostCap, 1e9}));
  }
  CHECK_FALSE(fits(f.at(f.ft, "cl000_gpu00"), filled));

  ResidualState empty;
  CHECK_THROWS_AS(fits(f.at(f.ft, "cl000_gpu00"), empty), ValidationError);
}

TEST_CASE("make_candidate rejects class mismatches and foreign subtrees") {
  PaperFixture f;
  const DeviceNode& fpga = f.topology.device("cl000_fpga00");
  CHECK_THROWS_AS(make_candidate(f.topology, f.ft, *f.ft.variant_for(DeviceClass::GPU), fpga, "in000"),
                  ValidationError);
  const DeviceNode& far = f.topology.device("cl004_gpu00");
  CHECK_THROWS_AS(make_candidate(f.topology, f.ft, *f.ft.variant_for(DeviceClass::GPU), far, "in000"),
                  ValidationError);
}

TEST_CASE("check_app enforces variant invariants") {
  CHECK_NOTHROW(check_app(paper_scenario().apps[0].app));
  CHECK_THROWS_AS(check_app({"x", 0.1, 1.0, {}}), ValidationError);
  CHECK_THROWS_AS(check_app({"x", 0.1, 0.0, {{DeviceClass::CPU, 1.0, 1.0}}}), ValidationError);
  CHECK_THROWS_AS(check_app({"x", 0.1, 1.0, {{DeviceClass::CPU, 1.0, 1.0}, {DeviceClass::CPU, 2.0, 1.0}}}),
                  ValidationError);
  CHECK_THROWS_AS(check_app({"x", 0.1, 1.0, {{DeviceClass::CPU, 0.0, 1.0}}}), ValidationError);
}

TEST_CASE("pricing properties on random candidates") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    gen::Instance inst = gen::random_instance(rng);
    PlacementRequest req = gen::request_for(inst);
    for (const CandidatePlacement& c : reachable_candidates(inst.topology, req)) {
      const double rt = response_time(c);
      const double p = price(c);
      CHECK(rt >= c.variant->processing_time);
      CHECK((rt == c.variant->processing_time) == (c.path.empty() || inst.app.transfer_data_size == 0.0));

      // Scaling every cost by lambda scales the price by lambda.
      const double lambda = 7.0;
      DeviceNode dev = *c.device;
      dev.full_cost *= lambda;
      std::vector<Link> links;
      for (const Link* l : c.path) links.push_back(*l), links.back().monthly_cost *= lambda;
      CandidatePlacement scaled = c;
      scaled.device = &dev;
      for (std::size_t i = 0; i < links.size(); ++i) scaled.path[i] = &links[i];
      CHECK(price(scaled) == doctest::Approx(lambda * p).epsilon(1e-12));
      CHECK(response_time(scaled) == rt);

      // Linear in resource demand, independent of processing time.
      AppVariant doubled = *c.variant;
      doubled.resource_demand *= 2.0;
      doubled.processing_time *= 3.0;
      CandidatePlacement heavier = c;
      heavier.variant = &doubled;
      double link_part = 0.0;
      for (const Link* l : c.path) link_part += l->monthly_cost * inst.app.bandwidth_demand / l->bandwidth_capacity;
      CHECK(price(heavier) == doctest::Approx(2.0 * (p - link_part) + link_part).epsilon(1e-12));
    }
  }
}
