#pragma once

#include <string>
#include <vector>

#include "edge_placer/solver.hpp"

namespace edge_placer {

struct LpTerm {
  double coefficient = 0.0;
  std::string variable;
};

enum class RowSense { LessEqual, Equal };

struct LpRow {
  std::string name;
  std::vector<LpTerm> terms;
  RowSense sense = RowSense::LessEqual;
  double rhs = 0.0;
};

/// Per-request 0-1 program. One binary per reachable (device, variant) pair;
/// link usage is folded into the rows because each device fixes its path.
struct IlpModel {
  BoundKind kind = BoundKind::CostCap;
  std::vector<LpTerm> objective;   // minimized
  std::vector<LpRow> rows;         // choice, bound, device caps, link caps
  std::vector<std::string> binaries;
};

/// Variable name for a (device, variant class) pair: x_<device>_<class>.
std::string lp_variable_name(std::string_view device_id, DeviceClass variant_class);

IlpModel build_ilp(const Topology& topology, const ResidualState& state, const PlacementRequest& request,
                   const Bound& bound);

/// CPLEX LP text. Lines in `comments` are emitted first as `\ ` comments.
/// A model without variables gets a single `x_none` binary with an
/// unsatisfiable choice row, so the file stays well-formed and infeasible.
std::string to_lp_text(const IlpModel& model, const std::vector<std::string>& comments = {});

}  // namespace edge_placer
