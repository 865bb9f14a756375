// test_harness.cpp — campaign reports, status rules and config handling.
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "specsat/config.hpp"
#include "specsat/error.hpp"
#include "specsat/harness.hpp"

using namespace specsat;

namespace {

CampaignOptions defaults() { return CampaignOptions::from_config(load_config()); }

const BoundCheck* find_check(const VerificationReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("status rules") {
  VerificationReport r;
  r.checks = {make_check("a", {1, 1}, {2, 2})};
  r.finalize();
  CHECK(r.status == Status::kPass);
  r.checks.push_back(make_check("b", {3, 3}, {2, 2}));
  r.finalize();
  CHECK(r.status == Status::kFail);
  r.checks.pop_back();
  r.checks.push_back(make_check("c", {1, 3}, {2, 2}));
  r.finalize();
  CHECK(r.status == Status::kReport);
  r.checks = {make_check("a", {1, 1}, {2, 2})};
  r.in_regime = false;
  r.finalize();
  CHECK(r.status == Status::kReport);
  VerificationReport empty;
  empty.finalize();
  CHECK(empty.status == Status::kPass);  // vacuous
}

TEST_CASE("report json round trip") {
  const auto rep = verify_l_vs_t(200, 2, 3, defaults());
  const Json j = to_json(rep, false);
  CHECK(!j.contains("wallclock_ms"));
  const auto back = report_from_json(to_json(rep));
  CHECK(back.theorem == rep.theorem);
  CHECK(back.status == rep.status);
  CHECK(back.checks.size() == rep.checks.size());
  CHECK(to_json(back, false).dump() == j.dump());
  CHECK(to_csv(rep).find("l-vs-t") != std::string::npos);
}

TEST_CASE("small min-max run is outside the regime") {
  const auto rep = verify_min_max(12, 2, 1, defaults());
  CHECK(rep.status == Status::kReport);
  CHECK(!rep.in_regime);
  CHECK(!rep.witnesses.empty());
}

TEST_CASE("min-max at valid scale") {
  const auto rep = verify_min_max(400, 2, 2, defaults());
  CHECK(rep.status == Status::kPass);
  CHECK(rep.in_regime);
  for (const auto& c : rep.checks) CHECK(c.verdict == Verdict::kPass);
}

TEST_CASE("tightness at n = 100") {
  const auto rep = verify_tightness(100, 2, 20, defaults());
  CHECK(rep.status == Status::kPass);
  REQUIRE(find_check(rep, "N_K3(T") != nullptr);
}

TEST_CASE("ning-zhai small scan") {
  const auto rep = verify_ning_zhai_exhaustive(6, defaults());
  CHECK(rep.status == Status::kPass);
  CHECK_THROWS_AS(verify_ning_zhai_exhaustive(9, defaults()), Error);
}

TEST_CASE("covering host checks") {
  const auto rep = verify_covering(40, 2, 3, named_pattern("K3"), defaults());
  CHECK(rep.status == Status::kPass);
}

TEST_CASE("campaign dispatch") {
  const auto names = theorem_names();
  CHECK(names.size() == 10);
  CHECK(run_campaign("l-vs-t", Json{{"n", 100}, {"r", 2}, {"q", 2}}, defaults()).theorem == "l-vs-t");
  CHECK_THROWS_AS(run_campaign("nope", Json::object(), defaults()), Error);
}

TEST_CASE("parallel runs match serial runs") {
  auto serial = defaults();
  auto parallel = serial;
  parallel.jobs = 4;
  const auto a = verify_supersat_family(60, 3, 2, named_pattern("K4"), serial);
  const auto b = verify_supersat_family(60, 3, 2, named_pattern("K4"), parallel);
  CHECK(to_json(a, false).dump() == to_json(b, false).dump());
}

TEST_CASE("config file matches the compiled-in default") {
  std::ifstream in(std::string(SPECSAT_SOURCE_DIR) + "/config/batteries.json");
  REQUIRE(in.good());
  const Json file = Json::parse(in);
  CHECK(file == Json::parse(default_battery_json()));
  CHECK(file["version"] == kConfigVersion);
}

TEST_CASE("config errors") {
  CHECK_THROWS(load_config("/nonexistent/batteries.json"));
  const auto opt = CampaignOptions::from_config(load_config());
  CHECK(opt.tol == 1e-10);
  CHECK(opt.seed == 20240611U);
}
