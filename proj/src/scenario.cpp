#include "edge_placer/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "edge_placer/numeric.hpp"
#include "edge_placer/solver.hpp"

namespace edge_placer {

ScenarioError::ScenarioError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line),
      message_(message) {}

const AppProfile* Scenario::find_app(std::string_view name) const {
  for (const AppProfile& a : apps)
    if (a.app.name == name) return &a;
  return nullptr;
}

double device_full_cost(const Pricing& pricing, Tier tier, DeviceClass device_class, double capacity) {
  double unit = pricing.unit_price[index_of(tier)][index_of(device_class)];
  if (pricing.mode == PricingMode::FlatServer) return unit * pricing.reference_capacity[index_of(device_class)];
  return unit * capacity;
}

TopologySpec topology_spec(const Scenario& s) {
  TopologySpec spec;
  for (Tier t : kAllTiers) {
    TierSpec& ts = spec.tier(t);
    ts.site_count = s.topology.site_counts[index_of(t)];
    for (const ServerFleet& f : s.topology.fleets[index_of(t)])
      ts.fleet.push_back({f.device_class, f.count, f.capacity, device_full_cost(s.pricing, t, f.device_class, f.capacity)});
  }
  spec.user_uplink = s.links.user_uplink;
  spec.carrier_uplink = s.links.carrier_uplink;
  spec.input_nodes = s.topology.input_nodes;
  return spec;
}

Topology build_topology(const Scenario& scenario) { return build_topology(topology_spec(scenario)); }

std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> out;
  if (s.schema_version != kScenarioSchemaVersion)
    out.push_back("unsupported schema_version " + std::to_string(s.schema_version));

  try {
    for (const std::string& v : validate_topology(build_topology(s))) out.push_back("topology: " + v);
  } catch (const ValidationError& e) {
    out.push_back(std::string("topology: ") + e.what());
  }

  for (Tier t : kAllTiers) {
    std::set<DeviceClass> seen;
    for (const ServerFleet& f : s.topology.fleets[index_of(t)])
      if (!seen.insert(f.device_class).second)
        out.push_back("fleet: duplicate " + std::string(to_string(f.device_class)) + " entry at " +
                      std::string(to_string(t)));
  }
  for (Tier t : kAllTiers)
    for (DeviceClass c : kAllDeviceClasses)
      if (!(s.pricing.unit_price[index_of(t)][index_of(c)] >= 0.0))
        out.push_back("pricing: negative unit price for " + std::string(to_string(t)) + "." +
                      std::string(to_string(c)));
  if (s.pricing.mode == PricingMode::FlatServer) {
    for (Tier t : kAllTiers)
      for (const ServerFleet& f : s.topology.fleets[index_of(t)])
        if (!(s.pricing.reference_capacity[index_of(f.device_class)] > 0.0))
          out.push_back("pricing: flat_server mode needs reference_capacity." +
                        std::string(to_string(f.device_class)));
  }

  if (s.apps.empty()) out.push_back("apps: catalog is empty");
  double total_weight = 0.0;
  std::set<std::string> names;
  for (const AppProfile& a : s.apps) {
    const std::string who = "app '" + a.app.name + "'";
    if (!names.insert(a.app.name).second) out.push_back(who + " declared twice");
    try {
      check_app(a.app);
    } catch (const ValidationError& e) {
      out.push_back(e.what());
    }
    if (!(a.mix_weight >= 0.0)) out.push_back(who + ": mix weight must be >= 0");
    total_weight += a.mix_weight;

    for (const auto* ladder : {&a.price_ladder, &a.deadline_ladder}) {
      if (ladder->empty()) continue;
      try {
        check_requirement({BoundKind::CostCap, *ladder});
      } catch (const ValidationError& e) {
        out.push_back(who + ": " + e.what());
      }
    }
    if (a.price_ladder.empty() && a.deadline_ladder.empty()) out.push_back(who + ": request menu is empty");

    for (const AppVariant& v : a.app.variants) {
      for (Tier t : kAllTiers) {
        if (s.topology.site_counts[index_of(t)] == 0) continue;
        const auto& fleet = s.topology.fleets[index_of(t)];
        bool hosted = std::any_of(fleet.begin(), fleet.end(), [&](const ServerFleet& f) {
          return f.device_class == v.device_class && f.count > 0;
        });
        if (!hosted && !a.partially_placeable)
          out.push_back(who + ": no " + std::string(to_string(v.device_class)) + " servers at " +
                        std::string(to_string(t)) + " (set partially_placeable = true)");
      }
    }
  }
  if (!s.apps.empty() && !(total_weight > 0.0)) out.push_back("apps: mix weights sum to zero");
  return out;
}

namespace {

// Cloud full-server monthly prices; the GPU figure is for a 16 GB server.
constexpr double kCloudCpuServerPrice = 50000.0;
constexpr double kCloudGpuServerPrice = 100000.0;
constexpr double kCloudFpgaServerPrice = 120000.0;
constexpr double kCpuUnitsPerServer = 100.0;
constexpr double kGpuReferenceGb = 16.0;
constexpr double kFpgaPercentPoints = 100.0;

constexpr std::array<double, 3> kTierMultiplier{1.5, 1.25, 1.0};  // user, carrier, cloud

void set_tier(Scenario& s, Tier t, int sites, std::vector<ServerFleet> fleet) {
  s.topology.site_counts[index_of(t)] = sites;
  s.topology.fleets[index_of(t)] = std::move(fleet);
}

}  // namespace

Scenario paper_scenario() {
  Scenario s;
  s.name = "paper";
  using DC = DeviceClass;
  set_tier(s, Tier::Cloud, 5,
           {{DC::CPU, 8, kCpuUnitsPerServer}, {DC::GPU, 4, 16.0}, {DC::FPGA, 2, kFpgaPercentPoints}});
  set_tier(s, Tier::CarrierEdge, 20,
           {{DC::CPU, 4, kCpuUnitsPerServer}, {DC::GPU, 2, 8.0}, {DC::FPGA, 1, kFpgaPercentPoints}});
  set_tier(s, Tier::UserEdge, 60, {{DC::CPU, 2, kCpuUnitsPerServer}, {DC::GPU, 1, 4.0}});
  s.topology.input_nodes = 300;

  s.pricing.mode = PricingMode::PerUnit;
  s.pricing.reference_capacity = {kCpuUnitsPerServer, kGpuReferenceGb, kFpgaPercentPoints};
  const std::array<double, 3> cloud_unit{kCloudCpuServerPrice / kCpuUnitsPerServer,
                                         kCloudGpuServerPrice / kGpuReferenceGb,
                                         kCloudFpgaServerPrice / kFpgaPercentPoints};
  for (Tier t : kAllTiers)
    for (DC c : kAllDeviceClasses)
      s.pricing.unit_price[index_of(t)][index_of(c)] = cloud_unit[index_of(c)] * kTierMultiplier[index_of(t)];

  s.links.user_uplink = {30.0, 5000.0};
  s.links.carrier_uplink = {100.0, 8000.0};

  AppProfile ft;
  ft.app = {"NAS.FT", 0.2, 2.0, {{DC::GPU, 5.8, 1.0}, {DC::CPU, 5.8 * 5.0, kCpuUnitsPerServer}}};
  ft.mix_weight = 3.0;
  ft.price_ladder = {7000.0, 8500.0, 10000.0};
  ft.deadline_ladder = {6.0, 7.0, 10.0};

  AppProfile mriq;
  mriq.app = {"MRI-Q", 0.15, 1.0, {{DC::FPGA, 2.0, 10.0}, {DC::CPU, 2.0 * 7.0, kCpuUnitsPerServer}}};
  mriq.mix_weight = 1.0;
  mriq.partially_placeable = true;  // no FPGA at user edges
  mriq.price_ladder = {12500.0, 20000.0};
  mriq.deadline_ladder = {4.0, 8.0};

  s.apps = {ft, mriq};
  return s;
}

Scenario cost_performance_demo_scenario() {
  Scenario s;
  s.name = "cost-performance-demo";
  using DC = DeviceClass;
  set_tier(s, Tier::Cloud, 1, {});
  set_tier(s, Tier::CarrierEdge, 1, {});
  set_tier(s, Tier::UserEdge, 1, {{DC::CPU, 1, 100.0}, {DC::GPU, 1, 16.0}});
  s.topology.input_nodes = 1;

  // A full CPU server costs 1000/month; one GB of GPU RAM costs 2000/month.
  s.pricing.mode = PricingMode::PerUnit;
  s.pricing.reference_capacity = {100.0, 16.0, 100.0};
  for (Tier t : kAllTiers) s.pricing.unit_price[index_of(t)] = {10.0, 2000.0, 2000.0};

  s.links.user_uplink = {100.0, 0.0};
  s.links.carrier_uplink = {100.0, 0.0};

  AppProfile a;
  a.app = {"A", 0.0, 1.0, {{DC::CPU, 10.0, 100.0}, {DC::GPU, 10.0 / 1.5, 1.0}}};
  a.mix_weight = 1.0;
  a.partially_placeable = true;
  a.price_ladder = {1000.0, 2000.0};
  a.deadline_ladder = {7.0, 12.0};

  AppProfile b;
  b.app = {"B", 0.0, 1.0, {{DC::CPU, 10.0, 100.0}, {DC::GPU, 10.0 / 3.0, 1.0}}};
  b.mix_weight = 1.0;
  b.partially_placeable = true;
  b.price_ladder = {1000.0, 2000.0};
  b.deadline_ladder = {5.0, 12.0};

  s.apps = {a, b};
  return s;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

constexpr std::array<std::string_view, 5> kSections{"topology", "pricing", "links", "apps", "requests"};

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void fail(const Entry& e, const std::string& msg) { throw ScenarioError(e.line, msg); }

double number(const Entry& e) {
  auto v = parse_double(e.value);
  if (!v) fail(e, "'" + e.key + "' expects a number, got '" + e.value + "'");
  return *v;
}

double positive(const Entry& e) {
  double v = number(e);
  if (!(v > 0.0)) fail(e, "'" + e.key + "' must be positive");
  return v;
}

double non_negative(const Entry& e) {
  double v = number(e);
  if (!(v >= 0.0)) fail(e, "'" + e.key + "' must not be negative");
  return v;
}

int count(const Entry& e) {
  auto v = parse_integer(e.value);
  if (!v) fail(e, "'" + e.key + "' expects an integer, got '" + e.value + "'");
  if (*v < 0 || *v > 1'000'000) fail(e, "'" + e.key + "' out of range");
  return static_cast<int>(*v);
}

bool boolean(const Entry& e) {
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  fail(e, "'" + e.key + "' expects true or false");
}

std::vector<double> ladder(const Entry& e) {
  std::vector<double> out;
  if (trim(e.value).empty()) return out;
  for (const std::string& part : split(e.value, ',')) {
    auto v = parse_double(part);
    if (!v) fail(e, "'" + e.key + "' has a non-numeric entry '" + std::string(trim(part)) + "'");
    if (!(*v > 0.0)) fail(e, "'" + e.key + "' entries must be positive");
    if (!out.empty() && !(*v > out.back())) fail(e, "'" + e.key + "' must be strictly increasing");
    out.push_back(*v);
  }
  return out;
}

Tier tier_of(const Entry& e, std::string_view s) {
  if (auto t = parse_tier(s)) return *t;
  fail(e, "unknown tier '" + std::string(s) + "' in key '" + e.key + "'");
}

DeviceClass class_of(const Entry& e, std::string_view s) {
  if (auto c = parse_device_class(s)) return *c;
  fail(e, "unknown device class '" + std::string(s) + "' in key '" + e.key + "'");
}

[[noreturn]] void unknown_key(const Entry& e, std::string_view section) {
  fail(e, "unknown key '" + e.key + "' in [" + std::string(section) + "]");
}

class Parser {
 public:
  Scenario run(std::string_view text) {
    tokenize(text);
    const Entry* version = find_required_root("schema_version");
    scenario_.schema_version = count(*version);
    if (scenario_.schema_version != kScenarioSchemaVersion)
      fail(*version, "unsupported schema_version " + version->value);
    for (std::string_view sec : kSections)
      if (!sections_.count(std::string(sec))) throw ScenarioError(0, "missing section [" + std::string(sec) + "]");

    parse_topology(sections_.at("topology"));
    parse_pricing(sections_.at("pricing"));
    parse_links(sections_.at("links"));
    parse_apps(sections_.at("apps"));
    parse_requests(sections_.at("requests"));
    return std::move(scenario_);
  }

 private:
  void tokenize(std::string_view text) {
    if (trim(text).empty()) throw ScenarioError(0, "scenario is empty");
    std::vector<Entry>* current = &root_;
    std::string current_name;
    int line_no = 0;
    for (const std::string& raw : split(text, '\n')) {
      ++line_no;
      std::string_view line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw ScenarioError(line_no, "malformed section header");
        std::string name(trim(line.substr(1, line.size() - 2)));
        if (std::find(kSections.begin(), kSections.end(), name) == kSections.end())
          throw ScenarioError(line_no, "unknown section [" + name + "]");
        auto [it, inserted] = sections_.try_emplace(name);
        if (!inserted) throw ScenarioError(line_no, "duplicate section [" + name + "]");
        current = &it->second;
        current_name = name;
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ScenarioError(line_no, "expected 'key = value'");
      Entry e{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))), line_no};
      if (e.key.empty()) throw ScenarioError(line_no, "empty key");
      current->push_back(std::move(e));
    }
  }

  const Entry* find_required_root(std::string_view key) {
    const Entry* found = nullptr;
    for (const Entry& e : root_) {
      if (e.key == "schema_version" || e.key == "name") {
        if (e.key == key) {
          if (found) fail(e, "duplicate key '" + e.key + "'");
          found = &e;
        }
        if (e.key == "name") scenario_.name = e.value;
      } else {
        fail(e, "unknown top-level key '" + e.key + "'");
      }
    }
    if (!found) throw ScenarioError(0, "missing " + std::string(key));
    return found;
  }

  // Rejects repeated keys within one scope.
  struct KeySet {
    std::set<std::string> seen;
    void add(const Entry& e) {
      if (!seen.insert(e.key).second) fail(e, "duplicate key '" + e.key + "'");
    }
    bool has(const std::string& k) const { return seen.count(k) != 0; }
  };

  static void require(const KeySet& keys, const std::string& key, std::string_view scope) {
    if (!keys.has(key)) throw ScenarioError(0, "missing '" + key + "' in " + std::string(scope));
  }

  void parse_topology(const std::vector<Entry>& entries) {
    KeySet keys;
    std::map<std::pair<Tier, DeviceClass>, std::pair<int, int>> fleet_lines;  // count line, capacity line
    for (const Entry& e : entries) {
      keys.add(e);
      auto parts = split(e.key, '.');
      if (parts.size() == 2 && parts[0] == "sites") {
        scenario_.topology.site_counts[index_of(tier_of(e, parts[1]))] = count(e);
      } else if (e.key == "input_nodes") {
        scenario_.topology.input_nodes = count(e);
      } else if (parts.size() == 4 && parts[0] == "fleet") {
        Tier t = tier_of(e, parts[1]);
        DeviceClass c = class_of(e, parts[2]);
        ServerFleet& f = fleet_entry(t, c);
        if (parts[3] == "count") {
          f.count = count(e);
          fleet_lines[{t, c}].first = e.line;
        } else if (parts[3] == "capacity") {
          f.capacity = positive(e);
          fleet_lines[{t, c}].second = e.line;
        } else {
          unknown_key(e, "topology");
        }
      } else {
        unknown_key(e, "topology");
      }
    }
    for (Tier t : kAllTiers) require(keys, "sites." + std::string(to_string(t)), "[topology]");
    require(keys, "input_nodes", "[topology]");
    for (const auto& [tc, lines] : fleet_lines) {
      if (lines.first == 0 || lines.second == 0)
        throw ScenarioError(std::max(lines.first, lines.second),
                            "fleet." + std::string(to_string(tc.first)) + "." + std::string(to_string(tc.second)) +
                                " needs both count and capacity");
    }
  }

  ServerFleet& fleet_entry(Tier t, DeviceClass c) {
    auto& fleet = scenario_.topology.fleets[index_of(t)];
    for (ServerFleet& f : fleet)
      if (f.device_class == c) return f;
    fleet.push_back({c, 0, 0.0});
    return fleet.back();
  }

  void parse_pricing(const std::vector<Entry>& entries) {
    KeySet keys;
    for (const Entry& e : entries) {
      keys.add(e);
      auto parts = split(e.key, '.');
      if (e.key == "mode") {
        if (e.value == "per_unit") scenario_.pricing.mode = PricingMode::PerUnit;
        else if (e.value == "flat_server") scenario_.pricing.mode = PricingMode::FlatServer;
        else fail(e, "mode must be per_unit or flat_server");
      } else if (parts.size() == 3 && parts[0] == "unit_price") {
        scenario_.pricing.unit_price[index_of(tier_of(e, parts[1]))][index_of(class_of(e, parts[2]))] =
            non_negative(e);
      } else if (parts.size() == 2 && parts[0] == "reference_capacity") {
        scenario_.pricing.reference_capacity[index_of(class_of(e, parts[1]))] = non_negative(e);
      } else {
        unknown_key(e, "pricing");
      }
    }
    require(keys, "mode", "[pricing]");
    for (Tier t : kAllTiers)
      for (DeviceClass c : kAllDeviceClasses)
        require(keys, "unit_price." + std::string(to_string(t)) + "." + std::string(to_string(c)), "[pricing]");
  }

  void parse_links(const std::vector<Entry>& entries) {
    KeySet keys;
    for (const Entry& e : entries) {
      keys.add(e);
      if (e.key == "user_edge_uplink.capacity_mbps") scenario_.links.user_uplink.bandwidth_capacity = positive(e);
      else if (e.key == "user_edge_uplink.monthly_cost") scenario_.links.user_uplink.monthly_cost = non_negative(e);
      else if (e.key == "carrier_edge_uplink.capacity_mbps") scenario_.links.carrier_uplink.bandwidth_capacity = positive(e);
      else if (e.key == "carrier_edge_uplink.monthly_cost") scenario_.links.carrier_uplink.monthly_cost = non_negative(e);
      else unknown_key(e, "links");
    }
    for (std::string_view k : {"user_edge_uplink.capacity_mbps", "user_edge_uplink.monthly_cost",
                               "carrier_edge_uplink.capacity_mbps", "carrier_edge_uplink.monthly_cost"})
      require(keys, std::string(k), "[links]");
  }

  void parse_apps(const std::vector<Entry>& entries) {
    KeySet keys;
    std::string scope;
    auto finish = [&] {
      if (scenario_.apps.empty()) return;
      for (std::string_view k : {"data_mb", "bandwidth_mbps", "mix_weight"}) require(keys, std::string(k), scope);
      for (const AppVariant& v : scenario_.apps.back().app.variants) {
        std::string base = "variant." + std::string(to_string(v.device_class)) + ".";
        require(keys, base + "processing_s", scope);
        require(keys, base + "demand", scope);
      }
    };
    for (const Entry& e : entries) {
      if (e.key == "app") {
        finish();
        if (e.value.empty()) fail(e, "app name is empty");
        if (scenario_.find_app(e.value)) fail(e, "app '" + e.value + "' declared twice");
        scenario_.apps.push_back({});
        scenario_.apps.back().app.name = e.value;
        keys = {};
        scope = "app '" + e.value + "'";
        continue;
      }
      if (scenario_.apps.empty()) fail(e, "'" + e.key + "' before any 'app ='");
      keys.add(e);
      AppProfile& a = scenario_.apps.back();
      auto parts = split(e.key, '.');
      if (e.key == "data_mb") a.app.transfer_data_size = non_negative(e);
      else if (e.key == "bandwidth_mbps") a.app.bandwidth_demand = positive(e);
      else if (e.key == "mix_weight") a.mix_weight = non_negative(e);
      else if (e.key == "partially_placeable") a.partially_placeable = boolean(e);
      else if (parts.size() == 3 && parts[0] == "variant") {
        DeviceClass c = class_of(e, parts[1]);
        AppVariant* v = nullptr;
        for (AppVariant& existing : a.app.variants)
          if (existing.device_class == c) v = &existing;
        if (!v) {
          a.app.variants.push_back({c, 0.0, 0.0});
          v = &a.app.variants.back();
        }
        if (parts[2] == "processing_s") v->processing_time = positive(e);
        else if (parts[2] == "demand") v->resource_demand = positive(e);
        else unknown_key(e, "apps");
      } else {
        unknown_key(e, "apps");
      }
    }
    finish();
    if (scenario_.apps.empty()) throw ScenarioError(0, "[apps] declares no app");
  }

  void parse_requests(const std::vector<Entry>& entries) {
    AppProfile* current = nullptr;
    KeySet keys;
    std::set<std::string> seen_apps;
    for (const Entry& e : entries) {
      if (e.key == "app") {
        current = nullptr;
        for (AppProfile& a : scenario_.apps)
          if (a.app.name == e.value) current = &a;
        if (!current) fail(e, "requests reference undeclared app '" + e.value + "'");
        if (!seen_apps.insert(e.value).second) fail(e, "requests for app '" + e.value + "' given twice");
        keys = {};
        continue;
      }
      if (!current) fail(e, "'" + e.key + "' before any 'app ='");
      keys.add(e);
      if (e.key == "price_ladder") current->price_ladder = ladder(e);
      else if (e.key == "deadline_ladder") current->deadline_ladder = ladder(e);
      else unknown_key(e, "requests");
    }
  }

  Scenario scenario_;
  std::vector<Entry> root_;
  std::map<std::string, std::vector<Entry>> sections_;
};

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_roundtrip(values[i]);
  }
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text) { return Parser{}.run(text); }

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  auto num = [](double v) { return format_roundtrip(v); };
  os << "# edge-placer scenario\n";
  os << "schema_version = " << s.schema_version << '\n';
  if (!s.name.empty()) os << "name = " << s.name << '\n';

  os << "\n[topology]\n";
  for (Tier t : {Tier::Cloud, Tier::CarrierEdge, Tier::UserEdge})
    os << "sites." << to_string(t) << " = " << s.topology.site_counts[index_of(t)] << '\n';
  os << "input_nodes = " << s.topology.input_nodes << '\n';
  for (Tier t : {Tier::Cloud, Tier::CarrierEdge, Tier::UserEdge}) {
    for (const ServerFleet& f : s.topology.fleets[index_of(t)]) {
      std::string base = "fleet." + std::string(to_string(t)) + "." + std::string(to_string(f.device_class));
      os << base << ".count = " << f.count << '\n';
      os << base << ".capacity = " << num(f.capacity) << '\n';
    }
  }

  os << "\n[pricing]\n";
  os << "mode = " << (s.pricing.mode == PricingMode::PerUnit ? "per_unit" : "flat_server") << '\n';
  for (Tier t : {Tier::Cloud, Tier::CarrierEdge, Tier::UserEdge})
    for (DeviceClass c : kAllDeviceClasses)
      os << "unit_price." << to_string(t) << '.' << to_string(c) << " = "
         << num(s.pricing.unit_price[index_of(t)][index_of(c)]) << '\n';
  for (DeviceClass c : kAllDeviceClasses)
    os << "reference_capacity." << to_string(c) << " = " << num(s.pricing.reference_capacity[index_of(c)]) << '\n';

  os << "\n[links]\n";
  os << "user_edge_uplink.capacity_mbps = " << num(s.links.user_uplink.bandwidth_capacity) << '\n';
  os << "user_edge_uplink.monthly_cost = " << num(s.links.user_uplink.monthly_cost) << '\n';
  os << "carrier_edge_uplink.capacity_mbps = " << num(s.links.carrier_uplink.bandwidth_capacity) << '\n';
  os << "carrier_edge_uplink.monthly_cost = " << num(s.links.carrier_uplink.monthly_cost) << '\n';

  os << "\n[apps]\n";
  for (const AppProfile& a : s.apps) {
    os << "app = " << a.app.name << '\n';
    os << "data_mb = " << num(a.app.transfer_data_size) << '\n';
    os << "bandwidth_mbps = " << num(a.app.bandwidth_demand) << '\n';
    os << "mix_weight = " << num(a.mix_weight) << '\n';
    os << "partially_placeable = " << (a.partially_placeable ? "true" : "false") << '\n';
    for (const AppVariant& v : a.app.variants) {
      os << "variant." << to_string(v.device_class) << ".processing_s = " << num(v.processing_time) << '\n';
      os << "variant." << to_string(v.device_class) << ".demand = " << num(v.resource_demand) << '\n';
    }
  }

  os << "\n[requests]\n";
  for (const AppProfile& a : s.apps) {
    os << "app = " << a.app.name << '\n';
    os << "price_ladder = " << join(a.price_ladder) << '\n';
    os << "deadline_ladder = " << join(a.deadline_ladder) << '\n';
  }
  return os.str();
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(0, "cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::uint64_t scenario_hash(const Scenario& scenario) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_scenario(scenario)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace edge_placer
