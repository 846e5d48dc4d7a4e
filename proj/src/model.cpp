#include "edge_placer/model.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "edge_placer/numeric.hpp"

namespace edge_placer {

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::UserEdge: return "user_edge";
    case Tier::CarrierEdge: return "carrier_edge";
    case Tier::Cloud: return "cloud";
  }
  return "?";
}

std::string_view to_string(DeviceClass c) {
  switch (c) {
    case DeviceClass::CPU: return "cpu";
    case DeviceClass::GPU: return "gpu";
    case DeviceClass::FPGA: return "fpga";
  }
  return "?";
}

std::optional<Tier> parse_tier(std::string_view s) {
  for (Tier t : kAllTiers)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

std::optional<DeviceClass> parse_device_class(std::string_view s) {
  for (DeviceClass c : kAllDeviceClasses)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

namespace {

template <typename T>
void index_first(const std::vector<T>& items, std::unordered_map<std::string, std::size_t>& index) {
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i].id, i);
}

template <typename T>
const T* lookup(const std::vector<T>& items, const std::unordered_map<std::string, std::size_t>& index,
                std::string_view id) {
  auto it = index.find(std::string(id));
  return it == index.end() ? nullptr : &items[it->second];
}

std::string site_prefix(Tier t) {
  switch (t) {
    case Tier::UserEdge: return "ue";
    case Tier::CarrierEdge: return "ce";
    case Tier::Cloud: return "cl";
  }
  return "xx";
}

std::string numbered(std::string_view prefix, int n, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*d", width, n);
  return std::string(prefix) + buf;
}

}  // namespace

Topology::Topology(std::vector<Site> sites, std::vector<DeviceNode> devices, std::vector<Link> links,
                   std::vector<InputNode> input_nodes)
    : sites_(std::move(sites)),
      devices_(std::move(devices)),
      links_(std::move(links)),
      input_nodes_(std::move(input_nodes)) {
  index_first(sites_, site_index_);
  index_first(devices_, device_index_);
  index_first(links_, link_index_);
  index_first(input_nodes_, input_index_);
  for (std::size_t i = 0; i < links_.size(); ++i) uplink_index_.emplace(links_[i].child_site, i);
}

const Site* Topology::find_site(std::string_view id) const { return lookup(sites_, site_index_, id); }
const DeviceNode* Topology::find_device(std::string_view id) const {
  return lookup(devices_, device_index_, id);
}
const Link* Topology::find_link(std::string_view id) const { return lookup(links_, link_index_, id); }
const InputNode* Topology::find_input(std::string_view id) const {
  return lookup(input_nodes_, input_index_, id);
}

const Site& Topology::site(std::string_view id) const {
  if (auto* s = find_site(id)) return *s;
  throw ValidationError("unknown site '" + std::string(id) + "'");
}
const DeviceNode& Topology::device(std::string_view id) const {
  if (auto* d = find_device(id)) return *d;
  throw ValidationError("unknown device '" + std::string(id) + "'");
}
const Link& Topology::link(std::string_view id) const {
  if (auto* l = find_link(id)) return *l;
  throw ValidationError("unknown link '" + std::string(id) + "'");
}
const InputNode& Topology::input(std::string_view id) const {
  if (auto* n = find_input(id)) return *n;
  throw ValidationError("unknown input node '" + std::string(id) + "'");
}

const Link* Topology::uplink_of(std::string_view site_id) const {
  auto it = uplink_index_.find(std::string(site_id));
  return it == uplink_index_.end() ? nullptr : &links_[it->second];
}

std::vector<const Site*> Topology::root_path(std::string_view input_node_id) const {
  const InputNode& in = input(input_node_id);
  std::vector<const Site*> path;
  const Site* current = &site(in.attached_user_edge);
  while (current != nullptr) {
    path.push_back(current);
    if (path.size() > sites_.size()) throw ValidationError("cycle in site graph above input '" + in.id + "'");
    const Link* up = uplink_of(current->id);
    current = up ? &site(up->parent_site) : nullptr;
  }
  return path;
}

bool Topology::operator==(const Topology& other) const {
  return sites_ == other.sites_ && devices_ == other.devices_ && links_ == other.links_ &&
         input_nodes_ == other.input_nodes_;
}

Topology build_topology(const TopologySpec& spec) {
  const int n_cloud = spec.tier(Tier::Cloud).site_count;
  const int n_carrier = spec.tier(Tier::CarrierEdge).site_count;
  const int n_user = spec.tier(Tier::UserEdge).site_count;
  const int n_input = spec.input_nodes;

  auto check_attach = [](int children, int parents, std::string_view what) {
    if (children < 0 || parents < 0) throw ValidationError(std::string(what) + ": negative count");
    if (children == 0) return;
    if (parents == 0)
      throw ValidationError(std::string(what) + ": " + std::to_string(children) + " children but no parents");
    if (children % parents != 0)
      throw ValidationError(std::string(what) + ": " + std::to_string(children) + " not divisible by " +
                            std::to_string(parents));
  };
  check_attach(n_carrier, n_cloud, "carrier edges over clouds");
  check_attach(n_user, n_carrier, "user edges over carrier edges");
  check_attach(n_input, n_user, "input nodes over user edges");

  auto check_link = [](const LinkSpec& l, std::string_view what) {
    if (!(l.bandwidth_capacity > 0.0)) throw ValidationError(std::string(what) + ": bandwidth capacity must be > 0");
    if (!(l.monthly_cost >= 0.0)) throw ValidationError(std::string(what) + ": monthly cost must be >= 0");
  };
  if (n_carrier > 0) check_link(spec.carrier_uplink, "carrier uplink");
  if (n_user > 0) check_link(spec.user_uplink, "user uplink");

  for (Tier t : kAllTiers) {
    for (const FleetEntry& f : spec.tier(t).fleet) {
      std::string what = std::string(to_string(t)) + " " + std::string(to_string(f.device_class)) + " fleet";
      if (f.count < 0) throw ValidationError(what + ": negative count");
      if (!(f.capacity > 0.0)) throw ValidationError(what + ": capacity must be > 0");
      if (!(f.full_cost >= 0.0)) throw ValidationError(what + ": cost must be >= 0");
    }
  }

  std::vector<Site> sites;
  std::vector<DeviceNode> devices;
  std::vector<Link> links;
  std::vector<InputNode> inputs;

  auto add_sites = [&](Tier t, int count) {
    for (int s = 0; s < count; ++s) {
      Site site{numbered(site_prefix(t), s, 3), t, {}};
      std::array<int, 3> per_class{};
      for (const FleetEntry& f : spec.tier(t).fleet) {
        for (int k = 0; k < f.count; ++k) {
          int& ordinal = per_class[index_of(f.device_class)];
          DeviceNode d{site.id + "_" + numbered(to_string(f.device_class), ordinal++, 2), site.id, t,
                       f.device_class, f.capacity, f.full_cost};
          site.devices.push_back(d.id);
          devices.push_back(std::move(d));
        }
      }
      sites.push_back(std::move(site));
    }
  };
  add_sites(Tier::Cloud, n_cloud);
  add_sites(Tier::CarrierEdge, n_carrier);
  add_sites(Tier::UserEdge, n_user);

  if (n_carrier > 0) {
    const int per_cloud = n_carrier / n_cloud;
    for (int c = 0; c < n_carrier; ++c) {
      std::string child = numbered("ce", c, 3);
      links.push_back({child + "_up", child, numbered("cl", c / per_cloud, 3), spec.carrier_uplink.bandwidth_capacity,
                       spec.carrier_uplink.monthly_cost});
    }
  }
  if (n_user > 0) {
    const int per_carrier = n_user / n_carrier;
    for (int u = 0; u < n_user; ++u) {
      std::string child = numbered("ue", u, 3);
      links.push_back({child + "_up", child, numbered("ce", u / per_carrier, 3), spec.user_uplink.bandwidth_capacity,
                       spec.user_uplink.monthly_cost});
    }
  }
  if (n_input > 0) {
    const int per_user = n_input / n_user;
    for (int i = 0; i < n_input; ++i) inputs.push_back({numbered("in", i, 3), numbered("ue", i / per_user, 3)});
  }

  Topology topo(std::move(sites), std::move(devices), std::move(links), std::move(inputs));
  if (auto violations = validate_topology(topo); !violations.empty())
    throw ValidationError("built topology is invalid: " + violations.front());
  return topo;
}

std::vector<std::string> uplink_path(const Topology& topology, std::string_view input_node_id,
                                     std::string_view site_id) {
  std::vector<std::string> path;
  for (const Site* s : topology.root_path(input_node_id)) {
    if (s->id == site_id) return path;
    if (const Link* up = topology.uplink_of(s->id)) path.push_back(up->id);
  }
  throw ValidationError("site '" + std::string(site_id) + "' is not on the root path of input '" +
                        std::string(input_node_id) + "'");
}

std::vector<std::string> validate_topology(const Topology& topology) {
  std::vector<std::string> out;

  auto check_unique = [&out](const auto& items, std::string_view kind) {
    std::set<std::string> seen;
    for (const auto& item : items)
      if (!seen.insert(item.id).second) out.push_back("duplicate " + std::string(kind) + " id '" + item.id + "'");
  };
  check_unique(topology.sites(), "site");
  check_unique(topology.devices(), "device");
  check_unique(topology.links(), "link");
  check_unique(topology.input_nodes(), "input node");

  for (const DeviceNode& d : topology.devices()) {
    if (!(d.capacity > 0.0)) out.push_back("device '" + d.id + "' has non-positive capacity");
    if (!(d.full_cost >= 0.0)) out.push_back("device '" + d.id + "' has negative cost");
    const Site* s = topology.find_site(d.site_id);
    if (s == nullptr) {
      out.push_back("device '" + d.id + "' references unknown site '" + d.site_id + "'");
    } else if (s->tier != d.tier) {
      out.push_back("device '" + d.id + "' tier differs from its site '" + s->id + "'");
    }
  }
  for (const Site& s : topology.sites()) {
    for (const std::string& dev : s.devices) {
      const DeviceNode* d = topology.find_device(dev);
      if (d == nullptr || d->site_id != s.id)
        out.push_back("site '" + s.id + "' lists device '" + dev + "' that is not attached to it");
    }
  }

  std::unordered_map<std::string, int> uplinks;
  for (const Link& l : topology.links()) {
    const Site* child = topology.find_site(l.child_site);
    const Site* parent = topology.find_site(l.parent_site);
    if (child == nullptr || parent == nullptr) {
      out.push_back("link '" + l.id + "' references an unknown site");
      continue;
    }
    if (child->tier == Tier::Cloud) {
      out.push_back("link '" + l.id + "' has cloud site '" + child->id + "' as child");
      continue;
    }
    if (index_of(parent->tier) != index_of(child->tier) + 1)
      out.push_back("link '" + l.id + "' does not go exactly one tier up");
    if (!(l.bandwidth_capacity > 0.0)) out.push_back("link '" + l.id + "' has non-positive bandwidth");
    if (!(l.monthly_cost >= 0.0)) out.push_back("link '" + l.id + "' has negative cost");
    ++uplinks[child->id];
  }
  for (const Site& s : topology.sites()) {
    if (s.tier == Tier::Cloud) continue;
    int n = uplinks.count(s.id) ? uplinks.at(s.id) : 0;
    if (n != 1) out.push_back("site '" + s.id + "' has " + std::to_string(n) + " uplinks, expected 1");
  }

  for (const InputNode& in : topology.input_nodes()) {
    const Site* s = topology.find_site(in.attached_user_edge);
    if (s == nullptr || s->tier != Tier::UserEdge)
      out.push_back("input node '" + in.id + "' is not attached to a user-edge site");
  }
  return out;
}

std::string to_text(const Topology& topology) {
  std::ostringstream os;
  for (const Site& s : topology.sites()) {
    os << "site " << s.id << ' ' << to_string(s.tier);
    for (const auto& d : s.devices) os << ' ' << d;
    os << '\n';
  }
  for (const DeviceNode& d : topology.devices())
    os << "device " << d.id << ' ' << d.site_id << ' ' << to_string(d.tier) << ' ' << to_string(d.device_class) << ' '
       << format_roundtrip(d.capacity) << ' ' << format_roundtrip(d.full_cost) << '\n';
  for (const Link& l : topology.links())
    os << "link " << l.id << ' ' << l.child_site << ' ' << l.parent_site << ' '
       << format_roundtrip(l.bandwidth_capacity) << ' ' << format_roundtrip(l.monthly_cost) << '\n';
  for (const InputNode& in : topology.input_nodes()) os << "input " << in.id << ' ' << in.attached_user_edge << '\n';
  return os.str();
}

}  // namespace edge_placer
