#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace robnash;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(ROBNASH_FIXTURE_DIR) + "/" + name; }

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("robnash_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("nash on the discoordination document is empty") {
  const auto r = run({"nash", fixture("discoordination.json")});
  CHECK(r.status == 0);
  const auto body = json::parse(r.out);
  CHECK(body["count"] == 0);
  CHECK(body["equilibria"].empty());
}

TEST_CASE("nash on the prisoner's dilemma") {
  const auto r = run({"nash", fixture("prisoner.json")});
  REQUIRE(r.status == 0);
  const auto body = json::parse(r.out);
  CHECK(body["count"] == 1);
  CHECK(body["equilibria"][0]["profile"] == json::array({-1, -1}));
  CHECK(body["equilibria"][0]["margin"] == 0.5);
  const auto csv = run({"nash", fixture("public-good-path3.json"), "--format", "csv"});
  CHECK(csv.out == "equilibrium,profile,margin\n0,\"0,1,0\",0.15\n1,\"1,0,1\",0.15\n");
}

TEST_CASE("margin on the public good path") {
  const auto r = run({"margin", fixture("public-good-path3.json"), "1,0,1"});
  REQUIRE(r.status == 0);
  CHECK(r.out ==
        "{\n  \"binding_players\": [1],\n  \"margin\": 0.15,\n  \"per_player_chi\": [0.7, 0.3, 0.7],\n"
        "  \"profile\": [1, 0, 1]\n}\n");
  const auto csv = run({"margin", fixture("prisoner.json"), "-1,-1", "--format", "csv"});
  CHECK(csv.out == "player,chi,binding\n0,1,true\n1,1,true\n");
}

TEST_CASE("break, fuzz and potential") {
  auto r = run({"break", fixture("prisoner.json"), "-1,-1", "--epsilon", "0.01"});
  REQUIRE(r.status == 0);
  auto body = json::parse(r.out);
  CHECK(body["perturbation"]["norm"] == 0.51);
  CHECK(body["still_nash"] == false);

  r = run({"fuzz", fixture("prisoner.json"), "-1,-1", "--samples", "100", "--seed", "9"});
  REQUIRE(r.status == 0);
  body = json::parse(r.out);
  CHECK(body["passed"] == true);
  CHECK(body["regimes"][1]["breaks"] == 100);
  CHECK(run({"fuzz", fixture("prisoner.json"), "-1,-1", "--samples", "100", "--seed", "9"}).out == r.out);

  r = run({"potential", fixture("k3-coordination.json")});
  REQUIRE(r.status == 0);
  body = json::parse(r.out);
  CHECK(body["verified"] == true);
  CHECK(body["potential"].size() == 8);
  r = run({"potential", fixture("discoordination.json")});
  CHECK(json::parse(r.out)["verified"] == false);
}

TEST_CASE("partition subcommands") {
  auto r = run({"freeze", fixture("k3-coordination.json"), "--partition", "0,1", "--z", "+1"});
  REQUIRE(r.status == 0);
  auto body = json::parse(r.out);
  CHECK(body["provenance"] == "frozen");
  CHECK(body["frozen_at"] == json::array({1}));
  CHECK(body["game"]["utilities"][0] == json::array({0, -2, 0, 2}));

  r = run({"average", fixture("k3-coordination.json"), "--partition", "0,1"});
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["game"]["utilities"][0] == json::array({1, -1, -1, 1}));

  r = run({"uniform-check", fixture("discoordination.json"), "--partition", "0", "--y", "+1", "--mode",
           "brute-force"});
  REQUIRE(r.status == 0);
  body = json::parse(r.out);
  CHECK(body["certified"] == false);
  CHECK(body["counterexample"] == json::array({-1}));

  r = run({"coupling", fixture("clique-pendants.json"), "--partition", "0,1,2,3", "--y", "+1,+1,+1,+1"});
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["certified"] == true);

  r = run({"cohesive", fixture("clique-pendants.json"), "--subset", "0,1,2,3"});
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["slack"] == json::array({2, 2, 2, 2}));
}

TEST_CASE("construct writes the equilibrium and a DOT file") {
  const auto dot = temp_path("construct.dot");
  std::remove(dot.c_str());
  const auto r = run({"construct", fixture("clique-pendants.json"), "--sign", "+1", "--dot", dot});
  REQUIRE(r.status == 0);
  const auto body = json::parse(r.out);
  CHECK(body["status"] == "certified");
  CHECK(body["profile"] == json::array({1, 1, 1, 1, -1, -1, -1, -1}));
  std::ifstream f(dot);
  std::stringstream text;
  text << f.rdbuf();
  CHECK(text.str().find("fillcolor=green") != std::string::npos);
  std::size_t green = 0;
  for (auto pos = text.str().find("fillcolor=green"); pos != std::string::npos;
       pos = text.str().find("fillcolor=green", pos + 1)) {
    ++green;
  }
  CHECK(green == 4);

  const auto down = run({"construct", fixture("clique-pendants.json"), "--sign", "-1"});
  CHECK(json::parse(down.out)["profile"] == json::array({-1, -1, -1, -1, 1, 1, 1, 1}));
}

TEST_CASE("export-dot") {
  const auto r = run({"export-dot", fixture("k3-coordination.json"), "+1,+1,+1"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("0 [label=\"0:\xCF\x87=4\", color=blue, shape=box, fillcolor=green];") != std::string::npos);
  CHECK(run({"export-dot", fixture("prisoner.json"), "-1,-1"}).status == cli::kValidationError);
}

TEST_CASE("exit codes per error class") {
  CHECK(cli::exit_code_for(InputError("x")) == 1);
  CHECK(cli::exit_code_for(CapacityError("x")) == 2);
  CHECK(cli::exit_code_for(DomainError("x")) == 3);
  CHECK(cli::exit_code_for(InvariantViolation("x")) == 4);

  const auto bad = write_temp("bad_prisoner.json",
                              R"({"format_version":"1.0","kind":"prisoner","a":3,"b":2,"c":1,"d":0})");
  auto r = run({"nash", bad});
  CHECK(r.status == 1);
  CHECK(r.err.find("c > b > a > d") != std::string::npos);
  CHECK(run({"nash", fixture("nope.json")}).status == 1);
  CHECK(run({"margin", fixture("prisoner.json"), "0,0"}).status == 1);

  CHECK(run({"nash", fixture("clique-pendants.json"), "--budget", "100"}).status == 2);

  r = run({"margin", fixture("prisoner.json"), "+1,+1"});
  CHECK(r.status == 3);
  CHECK(r.err.rfind("domain error:", 0) == 0);

  CHECK(run({}).status == 64);
  CHECK(run({"solve", fixture("prisoner.json")}).status == 64);
  CHECK(run({"nash", fixture("prisoner.json"), "--bogus"}).status == 64);
  CHECK(run({"nash", fixture("prisoner.json"), "--format", "xml"}).status == 64);
  CHECK(run({"--help"}).status == 0);
}
