#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "qcpn/cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qcpn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("kbasis") {
  auto j = run_json({"kbasis", "--n", "2"});
  CHECK(j["command"] == "kbasis");
  CHECK(j["det"] == "-1");
  CHECK(j["matrix"] == Json::parse(R"([["1","0","0"],["0","-1","0"],["0","0","1"]])"));
  CHECK(j["inverse"] == j["matrix"]);

  auto csv = run({"kbasis", "--n", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "1,0,0\n0,-1,0\n0,0,1\n");
}

TEST_CASE("kclass line accepts negative m") {
  auto j = run_json({"kclass", "line", "--n", "2", "--m", "-1"});
  CHECK(j["coeffs"] == Json::parse(R"(["1","1","1"])"));
  CHECK(j["text"] == "1 + t + t^2");
  CHECK(j["params"]["m"] == -1);
}

TEST_CASE("kclass assoc") {
  auto j = run_json({"kclass", "assoc", "--n", "3", "--su", "3"});
  CHECK(j["coeffs"] == Json::parse(R"(["3","0","3","2"])"));
  CHECK(j["determinant_condition"] == true);
  CHECK(j["decomposition"] == Json::parse(R"([{"label":-1,"multiplicity":2},{"label":2,"multiplicity":1}])"));
}

TEST_CASE("pair and restrict") {
  auto j = run_json({"pair", "--n", "3", "--m", "-1"});
  CHECK(j["pairings"] == Json::parse(R"(["1","-1","1","-1"])"));
  auto c = run_json({"pair", "--n", "2", "--coeffs", "0, 0, 1"});
  CHECK(c["pairings"] == Json::parse(R"(["0","0","1"])"));
  auto r = run_json({"restrict", "--n", "4", "--m", "3", "--to", "1"});
  CHECK(r["coeffs"] == Json::parse(R"(["1","-3"])"));
}

TEST_CASE("nc subcommands") {
  auto j = run_json({"nc", "reduce", "--n", "1", "--expr", "z0*z0s"});
  CHECK(j["normal_form"] == "1 - z1s*z1");
  CHECK(j["degree"] == 0);

  auto d = run_json({"nc", "degree", "--expr", "z0 + z1s"});
  CHECK(d["degree"] == "inhomogeneous");

  auto f = run_json({"nc", "fuzz", "--n", "2", "--trials", "200", "--seed", "7"});
  CHECK(f["report"]["passed"] == true);
  CHECK(f["report"]["inputs"] == 200);

  auto rel = run_json({"nc", "relations", "--n", "2"});
  CHECK(rel["report"]["passed"] == true);

  auto bad = run({"nc", "relations", "--n", "1", "--orientation", "stars-ascending"});
  CHECK(bad.code == 0);
  auto fuzz_bad = run({"nc", "fuzz", "--n", "1", "--trials", "2000", "--orientation", "stars-ascending"});
  CHECK(fuzz_bad.code == qcpn::cli::kExitDomainError);
  CHECK(Json::parse(fuzz_bad.out)["report"]["passed"] == false);
}

TEST_CASE("exit codes") {
  CHECK(run({"kbasis", "--n", "0"}).code == qcpn::cli::kExitDomainError);
  CHECK(run({"restrict", "--n", "3", "--m", "1", "--to", "5"}).code == qcpn::cli::kExitDomainError);
  CHECK(run({"nc", "reduce", "--n", "2", "--expr", "z3"}).code == qcpn::cli::kExitDomainError);
  CHECK(run({"nc", "reduce", "--n", "1", "--expr", "z0 +"}).code == qcpn::cli::kExitDomainError);
  CHECK(run({"kbasis"}).code == qcpn::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == qcpn::cli::kExitUsage);
  CHECK(run({}).code == qcpn::cli::kExitUsage);
  CHECK(run({"pair", "--n", "2"}).code == qcpn::cli::kExitUsage);
  CHECK(run({"pair", "--n", "2", "--m", "1", "--coeffs", "1,0,0"}).code == qcpn::cli::kExitUsage);
  CHECK(run({"pair", "--n", "2", "--coeffs", "1,x,0"}).code == qcpn::cli::kExitUsage);
  CHECK(run({"kbasis", "--n", "2", "--format", "xml"}).code == qcpn::cli::kExitUsage);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("(1 - t)^m") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"nc", "fuzz", "--n", "2", "--trials", "300", "--seed", "11"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"kbasis", "--n", "9"}).out == run({"kbasis", "--n", "9"}).out);
}

TEST_CASE("step cap from the environment") {
  ::setenv("QCPN_STEP_CAP", "2", 1);
  auto capped = run({"nc", "reduce", "--n", "2", "--expr", "z2*z1*z0*z2s*z1s*z0s"});
  ::setenv("QCPN_STEP_CAP", "zero", 1);
  auto garbage = run({"nc", "reduce", "--n", "1", "--expr", "z0"});
  ::unsetenv("QCPN_STEP_CAP");
  CHECK(capped.code == qcpn::cli::kExitDomainError);
  CHECK(garbage.code == qcpn::cli::kExitUsage);
  CHECK(run({"nc", "reduce", "--n", "2", "--expr", "z2*z1*z0*z2s*z1s*z0s"}).code == 0);
}
