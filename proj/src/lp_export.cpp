#include "edge_placer/lp_export.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "edge_placer/numeric.hpp"

namespace edge_placer {

std::string lp_variable_name(std::string_view device_id, DeviceClass variant_class) {
  return "x_" + std::string(device_id) + "_" + std::string(to_string(variant_class));
}

IlpModel build_ilp(const Topology& topology, const ResidualState& state, const PlacementRequest& request,
                   const Bound& bound) {
  if (bound.kind != request.requirement.kind)
    throw ValidationError("bound kind does not match the requirement of request " + std::to_string(request.id));

  auto candidates = reachable_candidates(topology, request);
  std::sort(candidates.begin(), candidates.end(), [](const CandidatePlacement& a, const CandidatePlacement& b) {
    if (a.device->id != b.device->id) return a.device->id < b.device->id;
    return index_of(a.variant->device_class) < index_of(b.variant->device_class);
  });

  IlpModel m;
  m.kind = bound.kind;
  LpRow choice{"choice", {}, RowSense::Equal, 1.0};
  LpRow bound_row{bound.kind == BoundKind::CostCap ? "price_cap" : "deadline", {}, RowSense::LessEqual, bound.value};
  std::vector<LpRow> device_rows;
  std::map<std::string, LpRow> link_rows;  // ordered by link id

  for (const CandidatePlacement& c : candidates) {
    std::string x = lp_variable_name(c.device->id, c.variant->device_class);
    const double rt = response_time(c);
    const double p = price(c);
    m.binaries.push_back(x);
    m.objective.push_back({bound.kind == BoundKind::CostCap ? rt : p, x});
    choice.terms.push_back({1.0, x});
    bound_row.terms.push_back({bound.kind == BoundKind::CostCap ? p : rt, x});
    device_rows.push_back({"dev_" + c.device->id, {{c.variant->resource_demand, x}}, RowSense::LessEqual,
                           state.device_residual(c.device->id)});
    for (const Link* l : c.path) {
      auto [it, inserted] =
          link_rows.try_emplace(l->id, LpRow{"link_" + l->id, {}, RowSense::LessEqual, state.link_residual(l->id)});
      it->second.terms.push_back({c.app->bandwidth_demand, x});
    }
  }

  m.rows.push_back(std::move(choice));
  m.rows.push_back(std::move(bound_row));
  for (LpRow& r : device_rows) m.rows.push_back(std::move(r));
  for (auto& [id, r] : link_rows) m.rows.push_back(std::move(r));
  return m;
}

namespace {

void write_terms(std::ostream& os, const std::vector<LpTerm>& terms) {
  bool first = true;
  for (const LpTerm& t : terms) {
    double c = t.coefficient;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "- ";
    os << format_roundtrip(c < 0 ? -c : c) << ' ' << t.variable;
    first = false;
  }
}

}  // namespace

std::string to_lp_text(const IlpModel& model, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const std::string& c : comments) os << "\\ " << c << '\n';

  const bool empty = model.binaries.empty();
  os << "Minimize\n obj: ";
  if (empty) os << "0 x_none";
  else write_terms(os, model.objective);
  os << "\nSubject To\n";
  if (empty) {
    os << " choice: 0 x_none = 1\n";
  } else {
    for (const LpRow& r : model.rows) {
      if (r.terms.empty()) continue;
      os << ' ' << r.name << ": ";
      write_terms(os, r.terms);
      os << (r.sense == RowSense::Equal ? " = " : " <= ") << format_roundtrip(r.rhs) << '\n';
    }
  }
  os << "Binary\n";
  if (empty) os << " x_none\n";
  for (const std::string& b : model.binaries) os << ' ' << b << '\n';
  os << "End\n";
  return os.str();
}

}  // namespace edge_placer
