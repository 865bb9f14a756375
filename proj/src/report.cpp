// report.cpp
#include "specsat/report.hpp"

#include <cstdio>

#include "specsat/error.hpp"
#include "specsat/graph6.hpp"

namespace specsat {

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kReport:
      return "report";
  }
  return "?";
}

void VerificationReport::finalize() {
  bool all_pass = true, failed = false;
  for (const BoundCheck& c : checks) {
    if (c.verdict != Verdict::kPass) all_pass = false;
    if (c.verdict == Verdict::kFail && c.in_regime) failed = true;
  }
  if (in_regime && failed) status = Status::kFail;
  else if (in_regime && all_pass) status = Status::kPass;
  else status = Status::kReport;
}

Json sidecar(const PartitionedGraph& pg) {
  Json j;
  j["n"] = pg.n();
  j["base_sizes"] = pg.base_sizes;
  Json parts = Json::array();
  for (const auto& part : pg.parts) parts.push_back(part);
  j["parts"] = parts;
  j["alpha1"] = pg.alpha1();
  j["alpha2"] = pg.alpha2();
  auto edges = [](const std::vector<Edge>& list) {
    Json out = Json::array();
    for (const Edge& e : list) out.push_back({e.u, e.v});
    return out;
  };
  j["added_class_edges"] = edges(pg.added_class_edges);
  j["deleted_cross_edges"] = edges(pg.deleted_cross_edges);
  return j;
}

Witness make_witness(const PartitionedGraph& pg, const std::string& role) {
  Witness w;
  w.graph6 = emit_graph6(pg.graph);
  w.sidecar["role"] = role;
  w.sidecar["label"] = member_label(pg);
  const Json side = sidecar(pg);
  for (auto it = side.begin(); it != side.end(); ++it) w.sidecar[it.key()] = it.value();
  return w;
}

Witness make_witness(const Graph& g, const std::string& role) {
  Witness w;
  w.graph6 = emit_graph6(g);
  w.sidecar["role"] = role;
  w.sidecar["n"] = g.n();
  return w;
}

Json to_json(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

Json to_json(const BoundCheck& c) {
  Json j;
  j["name"] = c.name;
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  j["relation"] = to_string(c.relation);
  j["verdict"] = to_string(c.verdict);
  j["margin"] = c.margin;
  j["in_regime"] = c.in_regime;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const VerificationReport& r, bool with_timing) {
  Json j;
  j["theorem"] = r.theorem;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  j["in_regime"] = r.in_regime;
  Json checks = Json::array();
  for (const BoundCheck& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  Json witnesses = Json::array();
  for (const Witness& w : r.witnesses) witnesses.push_back({{"graph6", w.graph6}, {"sidecar", w.sidecar}});
  j["witnesses"] = witnesses;
  j["observations"] = r.observations;
  if (with_timing) j["wallclock_ms"] = r.wallclock_ms;
  return j;
}

namespace {

Interval interval_from(const Json& j) {
  require(j.is_array() && j.size() == 2, ErrorKind::kInvalidArgument, "interval must be [lo, hi]");
  return {j[0].get<double>(), j[1].get<double>()};
}

template <class E>
E parse_enum(const std::string& s, std::initializer_list<E> all) {
  for (E e : all)
    if (s == to_string(e)) return e;
  fail(ErrorKind::kInvalidArgument, "unknown value '" + s + "' in report");
}

}  // namespace

VerificationReport report_from_json(const Json& j) {
  require(j.is_object(), ErrorKind::kInvalidArgument, "report must be a JSON object");
  VerificationReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.params = j.value("params", Json::object());
  r.status = parse_enum<Status>(j.at("status").get<std::string>(), {Status::kPass, Status::kFail, Status::kReport});
  r.in_regime = j.value("in_regime", true);
  for (const Json& c : j.value("checks", Json::array())) {
    BoundCheck b;
    b.name = c.at("name").get<std::string>();
    b.lhs = interval_from(c.at("lhs"));
    b.rhs = interval_from(c.at("rhs"));
    b.relation = parse_enum<Relation>(c.value("relation", std::string("<=")),
                                      {Relation::kLessEqual, Relation::kLess, Relation::kEqual});
    b.verdict = parse_enum<Verdict>(c.at("verdict").get<std::string>(),
                                    {Verdict::kPass, Verdict::kFail, Verdict::kIndeterminate, Verdict::kHypothesisNotMet});
    b.margin = c.value("margin", 0.0);
    b.in_regime = c.value("in_regime", true);
    b.note = c.value("note", std::string());
    r.checks.push_back(std::move(b));
  }
  for (const Json& w : j.value("witnesses", Json::array()))
    r.witnesses.push_back({w.at("graph6").get<std::string>(), w.value("sidecar", Json::object())});
  r.observations = j.value("observations", Json::array());
  r.wallclock_ms = j.value("wallclock_ms", 0LL);
  return r;
}

std::string csv_header() { return "theorem,params,status,check,lhs_lo,lhs_hi,relation,rhs_lo,rhs_hi,verdict,margin,in_regime\n"; }

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_csv(const VerificationReport& r) {
  std::string out;
  const std::string prefix = quote(r.theorem) + "," + quote(r.params.dump()) + "," + to_string(r.status) + ",";
  for (const BoundCheck& c : r.checks) {
    out += prefix + quote(c.name) + "," + num(c.lhs.lo) + "," + num(c.lhs.hi) + "," + quote(to_string(c.relation)) +
           "," + num(c.rhs.lo) + "," + num(c.rhs.hi) + "," + to_string(c.verdict) + "," + num(c.margin) + "," +
           (c.in_regime ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace specsat
