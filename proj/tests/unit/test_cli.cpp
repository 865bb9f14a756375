// test_cli.cpp — subcommands driven through the in-process entry point.
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = specsat::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run({"--help"}).code == specsat::cli::kExitOk);
  CHECK(run({"verify", "--help"}).code == specsat::cli::kExitOk);
  CHECK(run({}).code == specsat::cli::kExitUsage);
  CHECK(run({"spectrum", "--bogus"}).code == specsat::cli::kExitUsage);
  CHECK(run({"verify", "--theorem", "nope"}).code == specsat::cli::kExitUsage);
  const Run bad = run({"spectrum"}, "Bw!\n");
  CHECK(bad.code == specsat::cli::kExitUsage);
  CHECK(!bad.err.empty());
}

TEST_CASE("spectrum of K_{4,3}") {
  const Run r = run({"spectrum", "--family", "multipartite", "--sizes", "4,3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["lambda"].get<double>() - std::sqrt(12.0)) <= 1e-10);
  const Run piped = run({"spectrum", "--input", "-"}, "Bw\n@\n");
  CHECK(piped.code == 0);
  CHECK(std::count(piped.out.begin(), piped.out.end(), '\n') == 2);
  const Run csv = run({"spectrum", "--family", "turan", "--n", "7", "--r", "2", "--format", "csv"});
  CHECK(csv.out.rfind("graph6,lambda", 0) == 0);
}

TEST_CASE("construct emits graph6 and a sidecar") {
  const Run r = run({"construct", "--family", "Y", "--n", "7", "--r", "2", "--q", "2"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string g6, side;
  std::getline(lines, g6);
  std::getline(lines, side);
  CHECK(g6.size() > 1);
  CHECK(nlohmann::json::parse(side)["n"] == 7);
}

TEST_CASE("count and enumerate") {
  const Run c = run({"count", "--pattern", "K3", "--family", "Y", "--n", "20", "--r", "2", "--q", "3", "--tau"});
  REQUIRE(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["copies"] == 30);
  CHECK(j["tau"] == 3);
  const Run e = run({"enumerate", "--all", "4"});
  CHECK(e.code == 0);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 11);
  CHECK(run({"enumerate", "--all", "9"}).code == specsat::cli::kExitUsage);
}

TEST_CASE("verify exit codes and determinism") {
  const std::vector<std::string> args{"verify", "--theorem", "l-vs-t", "--n", "200", "--r", "2", "--q", "3", "--omit-timing"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("wallclock_ms") == std::string::npos);
  const Run small = run({"verify", "--theorem", "min-max", "--n", "12", "--r", "2", "--q", "1"});
  CHECK(small.code == 0);
  CHECK(nlohmann::json::parse(small.out)["status"] == "report");
}

TEST_CASE("report flattens json to csv") {
  const Run v = run({"verify", "--theorem", "l-vs-t", "--n", "100", "--r", "2", "--q", "2", "--omit-timing"});
  REQUIRE(v.code == 0);
  const Run r = run({"report", "-"}, v.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("l-vs-t") != std::string::npos);
}
