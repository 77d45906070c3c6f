#include <doctest.h>

#include <sstream>

#include "octo/cli.hpp"
#include "octo/json_io.hpp"

using namespace octo;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = run(std::move(args));
  REQUIRE(r.code == cli::kExitOk);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("table") {
  const Json j = run_json({"table", "--level", "3"});
  CHECK(j["level"] == 3);
  CHECK(j["basis"].size() == 8);
  CHECK(j["table"].size() == 8);
  CHECK(j["table"][1][2]["sign"] == 1);
  CHECK(j["table"][1][2]["index"] == 3);
  CHECK(j["seed"] == 42);
}

TEST_CASE("global flags after the subcommand") {
  const auto r = run({"table", "--level", "2", "--json", "--seed", "5"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["level"] == 2);
  CHECK(j["seed"] == 5);
}

TEST_CASE("check reports verdict and counterexample") {
  const Json j = run_json({"check", "--property", "associative", "--level", "3"});
  CHECK(j["verdict"] == "fails");
  CHECK(j["match"] == true);
  CHECK(j["counterexample"].size() == 3);
  const Json k = run_json({"check", "--property", "alternative", "--level", "3", "--samples", "50"});
  CHECK(k["verdict"] == "holds");
  CHECK(k["samples_tested"] == 50);
}

TEST_CASE("zero divisors") {
  CHECK(run_json({"zero-divisors", "--level", "4"})["count"].get<int>() > 0);
  CHECK(run_json({"zero-divisors", "--level", "3"})["count"] == 0);
}

TEST_CASE("chart round trip uses the dimension") {
  const Json j = run_json({"chart-roundtrip", "--level", "4", "--samples", "100"});
  CHECK(j["level"] == 2);
  CHECK(j["verdict"] == "pass");
  CHECK(j["max_error"].get<double>() < 1e-9);
  CHECK(run({"chart-roundtrip", "--level", "3"}).code == cli::kExitUsage);
  CHECK(run_json({"equiv-check", "--level", "8", "--samples", "100"})["verdict"] == "pass");
}

TEST_CASE("cohomology json") {
  const Json j = run_json({"cohomology", "--space", "OP2", "--coeffs", "Z"});
  REQUIRE(j["groups"].size() == 17);
  for (const auto& g : j["groups"]) {
    const int k = g["degree"];
    const bool z = k == 0 || k == 8 || k == 16;
    CHECK(g["group"]["rank"] == (z ? 1 : 0));
    CHECK(g["group"]["torsion"].empty());
  }
  const Json rp2 = run_json({"cohomology", "--space", "RP2", "--coeffs", "Z", "--degree", "2"});
  CHECK(rp2["groups"][0]["group"]["torsion"][0] == 2);
  CHECK(run({"cohomology", "--space", "XP9"}).code == cli::kExitUsage);
  CHECK(run({"cohomology", "--coeffs", "Zmod:1"}).code == cli::kExitUsage);
}

TEST_CASE("hopf proxies are labeled") {
  const Json b = run_json({"hopf", "--mode", "bidegree", "--level", "3"});
  CHECK(b["hopf_invariant"] == 1);
  CHECK(b["method"] == "bidegree");
  CHECK(b["proxy"] == true);
  const Json l = run_json({"hopf", "--mode", "linking", "--segments", "256", "--seed", "7"});
  CHECK(std::abs(l["hopf_invariant"].get<int>()) == 1);
  CHECK(l["method"] == "linking");
  CHECK(l["seed"] == 7);
  CHECK(run({"hopf", "--mode", "cup"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"check", "--property", "nonsense"}).code == cli::kExitUsage);
  CHECK(run({"check", "--level", "9"}).code == cli::kExitUsage);
  CHECK(run({"table", "--samples", "-3"}).code == cli::kExitUsage);
  CHECK(run({"table", "--level", "x"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("text output echoes the seed") {
  const auto r = run({"check", "--property", "flexible", "--level", "4", "--samples", "10", "--seed", "123"});
  CHECK(r.code == 0);
  CHECK(r.out.find("seed 123") != std::string::npos);
}

TEST_CASE("audit-all is deterministic and green") {
  const auto a = run({"--json", "audit-all", "--seed", "42", "--samples", "200"});
  const auto b = run({"--json", "audit-all", "--seed", "42", "--samples", "200"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["all_match"] == true);
  CHECK(j["seed"] == 42);
}
