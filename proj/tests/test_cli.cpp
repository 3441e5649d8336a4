// End-to-end checks of the command-line binary: exact bytes on stdout,
// exit codes, stderr diagnostics, and determinism across runs. The binary
// path comes in through the PGAUGE_CLI_PATH compile definition.
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int call = 0;
  const std::string err_file =
      "pgauge_cli_stderr_" + std::to_string(call++) + ".txt";
  std::string cmd = env.empty() ? std::string() : env + " ";
  cmd += std::string(PGAUGE_CLI_PATH) + " " + args + " 2>" + err_file;

  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;

  std::ifstream ef(err_file);
  std::ostringstream ss;
  ss << ef.rdbuf();
  r.err = ss.str();
  std::remove(err_file.c_str());
  return r;
}

}  // namespace

TEST_CASE("closed-form allocation prints exact rounded coordinates") {
  const CliResult r = run_cli("allocate --smn M=2,N=3 --policy product");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{\"point\":[0.6666666667,0.3333333333,0.3333333333]}\n");
  CHECK(r.err.empty());
}

TEST_CASE("index evaluation output is stable to the byte") {
  const CliResult r = run_cli("index --f harmonic --point '[1,2,3]'");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{\"index\":{\"kind\":\"harmonic\"},\"point\":[1.0,2.0,3.0],"
        "\"value\":0.5454545455}\n");
}

TEST_CASE("classification over the terminal reports a named verdict") {
  const CliResult r = run_cli("index --f jain --classify --seed 5");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("verdict") == "non-monotone");
  CHECK(j.at("witness").is_array());
}

TEST_CASE("repeated runs with one seed are byte-identical") {
  const CliResult a = run_cli("verify --seed 7");
  const CliResult b = run_cli("verify --seed 7");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("FAIL") == std::string::npos);

  SUBCASE("the seed environment variable is an alias for --seed") {
    const CliResult c = run_cli("verify", "PARETO_GAUGE_SEED=7");
    CHECK(c.status == 0);
    CHECK(c.out == a.out);
  }
}

TEST_CASE("malformed inputs exit with code 2 and name the bad field") {
  const CliResult smn = run_cli("allocate --smn M=abc,N=3");
  CHECK(smn.status == 2);
  CHECK(smn.err.find("smn") != std::string::npos);

  const CliResult set = run_cli("pareto --set '{\"pts\":[]}'");
  CHECK(set.status == 2);
  CHECK(set.err.find("points") != std::string::npos);

  const CliResult kind =
      run_cli("index --f '{\"kind\":\"nope\"}' --point '[1,2]'");
  CHECK(kind.status == 2);
  CHECK(kind.err.find("kind") != std::string::npos);

  const CliResult neg = run_cli("index --point '[-1,2]'");
  CHECK(neg.status == 2);
  CHECK(neg.err.find("point") != std::string::npos);

  const CliResult garbage = run_cli("pareto --set 'not json'");
  CHECK(garbage.status == 2);
  CHECK(garbage.err.find("set") != std::string::npos);
}

TEST_CASE("coverage construction reports success through the exit code") {
  const CliResult r = run_cli(
      "eps-approx --set '{\"points\":[[1,4],[2,2],[4,1]]}' --eps 0.25");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("covered") == true);
  CHECK(j.at("size").get<int>() <= 3);
}

TEST_CASE("family sweeps print a fixed-layout CSV") {
  const CliResult r = run_cli("sweep --ms 2 --n 2 --resolution 11");
  CHECK(r.status == 0);
  CHECK(r.out == "M,N,policy,measure,value\n2,2,product,poa,1.333333333\n");

  SUBCASE("the JSON format carries the same numbers") {
    const CliResult j =
        run_cli("sweep --ms 2 --n 2 --resolution 11 --format json");
    CHECK(j.status == 0);
    const auto arr = nlohmann::json::parse(j.out);
    REQUIRE(arr.size() == 1);
    CHECK(arr[0].at("policy") == "product");
    CHECK(arr[0].at("value").get<double>() == doctest::Approx(4.0 / 3.0));
  }
}

TEST_CASE("demonstrations are listed in their canonical order") {
  const CliResult r = run_cli("demo --list");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "[\"sum-discontinuity\",\"policy-jump-geometric-opt\","
        "\"policy-jump-arithmetic-opt\",\"convex-nonmonotone\","
        "\"jain-maxmin-flaw\",\"jain-nonpareto\",\"braess-jain\"]\n");

  SUBCASE("running them all succeeds") {
    const CliResult all = run_cli("demo");
    CHECK(all.status == 0);
    const auto arr = nlohmann::json::parse(all.out);
    CHECK(arr.size() == 7);
    for (const auto& d : arr) CHECK(d.at("passed") == true);
  }

  SUBCASE("an unknown name is an input error") {
    const CliResult bad = run_cli("demo no-such-demo");
    CHECK(bad.status == 2);
    CHECK(bad.err.find("demo") != std::string::npos);
  }
}

TEST_CASE("the three measures agree on a doubling instance") {
  const CliResult r = run_cli(
      "ineff --set '{\"points\":[[1,1],[2,2]]}' --beta '[1,1]' "
      "--f arithmetic");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("poa").get<double>() == 2.0);
  CHECK(j.at("sdf").get<double>() == 2.0);
  CHECK(j.at("topo").get<double>() == 2.0);
  CHECK(j.at("poa_witness") == nlohmann::json::parse("[2.0,2.0]"));
}

TEST_CASE("sets can come from a file with the @ prefix") {
  const std::string path = "pgauge_cli_input_set.json";
  {
    std::ofstream out(path);
    out << "{\"points\":[[1,1],[2,1],[1,2],[0.5,0.5]]}";
  }
  const CliResult r = run_cli("pareto --set @" + path);
  std::remove(path.c_str());
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("source_size") == 4);
  REQUIRE(j.at("front").size() == 2);
  CHECK(j.at("front")[0] == nlohmann::json::parse("[2.0,1.0]"));
  CHECK(j.at("front")[1] == nlohmann::json::parse("[1.0,2.0]"));
}

TEST_CASE("label shorthands cover parameterized indexes and catalog policies") {
  const CliResult quasi = run_cli("index --f 'quasi(2)' --point '[1,2,3]'");
  CHECK(quasi.status == 0);
  CHECK(quasi.out ==
        "{\"index\":{\"delta\":2.0,\"kind\":\"quasi\"},"
        "\"point\":[1.0,2.0,3.0],\"value\":2.160246899}\n");

  const CliResult lo = run_cli("index --f 'quasi(-inf)' --point '[1,2,3]'");
  CHECK(lo.status == 0);
  CHECK(nlohmann::json::parse(lo.out).at("value") == 1.0);

  const CliResult opt =
      run_cli("allocate --set '[[1,3],[3,1],[2,2]]' --policy 'quasi(2)-opt'");
  CHECK(opt.status == 0);
  CHECK(opt.out == "{\"point\":[3.0,1.0]}\n");

  const CliResult bad = run_cli("index --f 'quasi(x)' --point '[1,2]'");
  CHECK(bad.status == 2);
  CHECK(bad.err.find("field 'delta'") != std::string::npos);
}

TEST_CASE("a bare array is accepted wherever a set object is") {
  const CliResult r =
      run_cli("allocate --set '[[1,3],[3,1],[2,2]]' --policy maxmin-fair");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"point\":[2.0,2.0]}\n");

  const CliResult p = run_cli("pareto --set '[[1,1],[2,1],[1,2]]'");
  CHECK(p.status == 0);
  CHECK(nlohmann::json::parse(p.out).at("source_size") == 3);
}
