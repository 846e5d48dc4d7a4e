#include "edge_placer/trace_csv.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "edge_placer/numeric.hpp"

namespace edge_placer {

namespace {

constexpr int kDecimals = 6;

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

}  // namespace

void write_trace_csv(std::ostream& os, std::span<const RequestOutcome> outcomes) {
  os << kTraceCsvHeader << '\n';
  double sum = 0.0;
  std::size_t placed_count = 0;
  std::size_t index = 0;
  for (const RequestOutcome& o : outcomes) {
    ++index;
    if (const Placement* p = placed(o)) {
      sum += p->response_time;
      ++placed_count;
      os << index << ',' << p->request_id << ',' << p->app << ',' << to_string(p->granted_bound.kind) << ','
         << format_fixed(p->granted_bound.value, kDecimals) << ',' << to_string(p->tier) << ',' << p->device_id << ','
         << format_fixed(p->response_time, kDecimals) << ',' << format_fixed(p->price, kDecimals) << ','
         << format_fixed(sum / static_cast<double>(placed_count), kDecimals) << ",0\n";
    } else {
      const Rejection& r = std::get<Rejection>(o);
      os << index << ',' << r.request_id << ',' << r.app << ',' << to_string(r.kind) << ",,,,,,";
      if (placed_count > 0) os << format_fixed(sum / static_cast<double>(placed_count), kDecimals);
      os << ",1\n";
    }
  }
}

std::string trace_csv(std::span<const RequestOutcome> outcomes) {
  std::ostringstream os;
  write_trace_csv(os, outcomes);
  return os.str();
}

std::vector<CsvRow> parse_trace_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw CsvError("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceCsvHeader) throw CsvError("line 1: unexpected header");

  std::vector<CsvRow> rows;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    auto f = split_csv(line);
    if (f.size() != 11) throw CsvError(where + "expected 11 columns, got " + std::to_string(f.size()));

    CsvRow r;
    r.line = line_no;
    auto idx = parse_integer(f[0]);
    auto rid = parse_integer(f[1]);
    if (!idx || *idx < 1 || !rid || *rid < 1) throw CsvError(where + "bad index or request_id");
    r.index = static_cast<std::size_t>(*idx);
    r.request_id = static_cast<std::uint64_t>(*rid);
    r.app = f[2];
    auto kind = parse_bound_kind(f[3]);
    if (!kind) throw CsvError(where + "bad granted_bound_kind '" + f[3] + "'");
    r.kind = *kind;
    if (f[10] != "0" && f[10] != "1") throw CsvError(where + "bad rejected flag '" + f[10] + "'");
    r.rejected = f[10] == "1";
    r.running_avg = f[9];
    if (!r.running_avg.empty() && !parse_double(r.running_avg)) throw CsvError(where + "bad running average");

    if (r.rejected) {
      for (int c : {4, 5, 6, 7, 8})
        if (!f[c].empty()) throw CsvError(where + "rejected row carries placement fields");
    } else {
      r.bound_value = parse_double(f[4]);
      r.tier = parse_tier(f[5]);
      r.device_id = f[6];
      r.response_time = parse_double(f[7]);
      r.price = parse_double(f[8]);
      if (!r.bound_value || !r.tier || r.device_id.empty() || !r.response_time || !r.price)
        throw CsvError(where + "malformed placement fields");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<RequestOutcome> outcomes_from_rows(const std::vector<CsvRow>& rows) {
  std::vector<RequestOutcome> out;
  out.reserve(rows.size());
  for (const CsvRow& r : rows) {
    if (r.rejected) {
      out.push_back(Rejection{r.request_id, r.app, r.kind});
      continue;
    }
    Placement p;
    p.request_id = r.request_id;
    p.app = r.app;
    p.device_id = r.device_id;
    p.tier = *r.tier;
    p.response_time = *r.response_time;
    p.price = *r.price;
    p.granted_bound = {r.kind, *r.bound_value};
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// Recomputes (response time, price) for an app on a device, using the path
// from the first input node below the device's site.
std::optional<std::pair<double, double>> recompute(const Topology& topology, const AppType& app,
                                                   const DeviceNode& device) {
  const AppVariant* v = app.variant_for(device.device_class);
  if (!v) return std::nullopt;
  for (const InputNode& in : topology.input_nodes()) {
    for (const Site* s : topology.root_path(in.id)) {
      if (s->id != device.site_id) continue;
      CandidatePlacement c = make_candidate(topology, app, *v, device, in.id);
      return std::make_pair(response_time(c), price(c));
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> check_trace_rows(const std::vector<CsvRow>& rows, const Scenario* scenario) {
  std::vector<std::string> issues;
  std::optional<Topology> topology;
  if (scenario) topology = build_topology(*scenario);

  double sum = 0.0;
  std::size_t placed_count = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CsvRow& r = rows[i];
    const std::string where = "line " + std::to_string(r.line) + ": ";
    if (r.index != i + 1) issues.push_back(where + "index out of sequence");
    if (r.request_id != i + 1) issues.push_back(where + "request_id out of sequence");

    if (!r.rejected) {
      sum += *r.response_time;
      ++placed_count;
    }
    std::string expected_avg =
        placed_count > 0 ? format_fixed(sum / static_cast<double>(placed_count), kDecimals) : std::string{};
    if (r.running_avg != expected_avg)
      issues.push_back(where + "replay mismatch: running average " + r.running_avg + " but response times give " +
                       expected_avg);

    if (r.rejected || !topology) continue;
    const AppProfile* app = scenario->find_app(r.app);
    const DeviceNode* dev = topology->find_device(r.device_id);
    if (!app) {
      issues.push_back(where + "unknown app '" + r.app + "'");
      continue;
    }
    if (!dev) {
      issues.push_back(where + "unknown device '" + r.device_id + "'");
      continue;
    }
    if (dev->tier != *r.tier) issues.push_back(where + "tier does not match device '" + dev->id + "'");
    auto values = recompute(*topology, app->app, *dev);
    if (!values) {
      issues.push_back(where + "app '" + r.app + "' cannot run on device '" + dev->id + "'");
      continue;
    }
    if (format_fixed(values->first, kDecimals) != format_fixed(*r.response_time, kDecimals))
      issues.push_back(where + "replay mismatch: response_time " + format_fixed(*r.response_time, kDecimals) +
                       " but model gives " + format_fixed(values->first, kDecimals));
    if (format_fixed(values->second, kDecimals) != format_fixed(*r.price, kDecimals))
      issues.push_back(where + "replay mismatch: price " + format_fixed(*r.price, kDecimals) + " but model gives " +
                       format_fixed(values->second, kDecimals));
    double granted_metric = r.kind == BoundKind::CostCap ? values->second : values->first;
    if (!approx_le(granted_metric, *r.bound_value)) issues.push_back(where + "placement violates its granted bound");
  }
  return issues;
}

}  // namespace edge_placer
