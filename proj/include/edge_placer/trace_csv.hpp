#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edge_placer/scenario.hpp"
#include "edge_placer/simulator.hpp"

namespace edge_placer {

inline constexpr const char* kTraceCsvHeader =
    "index,request_id,app,granted_bound_kind,granted_bound_value,tier,device_id,response_time_s,price_yen,"
    "running_avg_response_s,rejected";

/// One row per outcome. Floats use 6 decimals. Rejected rows keep the
/// requirement kind and leave the bound value and device fields empty.
void write_trace_csv(std::ostream& os, std::span<const RequestOutcome> outcomes);
std::string trace_csv(std::span<const RequestOutcome> outcomes);

struct CsvRow {
  std::size_t index = 0;
  std::uint64_t request_id = 0;
  std::string app;
  BoundKind kind = BoundKind::CostCap;
  std::optional<double> bound_value;
  std::optional<Tier> tier;
  std::string device_id;
  std::optional<double> response_time;
  std::optional<double> price;
  std::string running_avg;  // verbatim, may be empty
  bool rejected = false;
  int line = 0;
};

class CsvError : public std::runtime_error {
 public:
  explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

/// Throws CsvError on a wrong header, wrong column count or unparsable field.
std::vector<CsvRow> parse_trace_csv(std::istream& is);

/// Outcomes as far as the CSV records them (no path or demands).
std::vector<RequestOutcome> outcomes_from_rows(const std::vector<CsvRow>& rows);

/// Consistency problems in a parsed trace: numbering, running averages, and,
/// when a scenario is given, device existence, tiers, response times, prices
/// and granted bounds recomputed from the model.
std::vector<std::string> check_trace_rows(const std::vector<CsvRow>& rows, const Scenario* scenario = nullptr);

}  // namespace edge_placer
