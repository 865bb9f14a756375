// report.hpp — verification reports and their JSON / CSV forms.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "specsat/bounds.hpp"
#include "specsat/families.hpp"

namespace specsat {

using Json = nlohmann::ordered_json;

enum class Status { kPass, kFail, kReport };
const char* to_string(Status s);

struct Witness {
  std::string graph6;
  Json sidecar = Json::object();
};

struct VerificationReport {
  std::string theorem;
  Json params = Json::object();
  Status status = Status::kReport;
  std::vector<BoundCheck> checks;
  std::vector<Witness> witnesses;
  Json observations = Json::array();
  long long wallclock_ms = 0;
  /// False when the claim's own hypotheses fail at these parameters; such a
  /// report is never pass or fail, only report.
  bool in_regime = true;

  /// pass: in regime and every check passed. fail: some in-regime check failed.
  /// report: everything else.
  void finalize();
};

/// Parts, base sizes and the added / deleted edges of a partitioned graph.
Json sidecar(const PartitionedGraph& pg);
Witness make_witness(const PartitionedGraph& pg, const std::string& role);
Witness make_witness(const Graph& g, const std::string& role);

Json to_json(const Interval& iv);
Json to_json(const BoundCheck& c);
/// wallclock_ms is the only run-dependent field; leave it out for a stable body.
Json to_json(const VerificationReport& r, bool with_timing = true);
VerificationReport report_from_json(const Json& j);

std::string csv_header();
std::string to_csv(const VerificationReport& r);

}  // namespace specsat
