#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Spawns the installed binary and checks exit codes and output documents.

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path =
      std::string("/tmp/uqgl_cli_test_") + std::to_string(::getpid()) + ".out";
  const std::string cmd =
      std::string(UQGL_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(out_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("build dumps a verified document") {
  const auto r = run_cli("build --weight 1,0,5 --q 1.7");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("classification").at("class") == "typical");
  CHECK(j.at("dimensions").at("total") == 8);
  CHECK(j.at("matrices").at("E11").size() == 8);
}

TEST_CASE("non-dominant weights exit with the input code") {
  CHECK(run_cli("build --weight 0,1,0").exit_code == 2);
  CHECK(run_cli("build --weight 1,0").exit_code == 2);
  CHECK(run_cli("build --weight 1,0.5,0").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("non-finite matrices exit with the numeric code") {
  // a1 = 0 divides the odd matrix elements
  CHECK(run_cli("build --weight 1,0,5 --a1 0").exit_code == 3);
}

TEST_CASE("verify: pass, bad q, classical mode") {
  CHECK(run_cli("verify --weight 1,0,5").exit_code == 0);
  CHECK(run_cli("verify --weight 1,0,5 --q 1.0 --mode generic").exit_code == 2);
  CHECK(run_cli("verify --weight 1,0,5 --q 1.0 --mode classical-limit")
            .exit_code == 0);
  // an impossible tolerance turns every check into a failure: exit code 1
  const auto r = run_cli("verify --weight 1,0,5 --tolerance 0");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out).at("all_pass") == false);
}

TEST_CASE("build reports the classification inline") {
  const auto r = run_cli("build --weight 1,0,-2");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out).at("classification").at("class") ==
        "nontypical-class-1");
}

TEST_CASE("classify reports the non-typical classes") {
  const auto r = run_cli("classify --weight 1,0,-2");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("class") == "nontypical-class-1");
  CHECK(j.at("dimensions").at("factor") == 5);

  const auto r2 = run_cli("classify --weight 1,0,0");
  CHECK(json::parse(r2.out).at("class") == "nontypical-class-2");
}

TEST_CASE("scan flags exactly the two non-typical lines") {
  const auto r = run_cli("scan --d 0:3 --m33 -5:5 --m33-extra pi --q-list 1.7,e");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("cells").size() == 4 * 12 * 2);
  for (const auto& cell : j.at("cells")) {
    const int m13 = cell.at("weight").at(0).get<int>();
    const int m23 = cell.at("weight").at(1).get<int>();
    const double m33 = cell.at("weight").at(2).get<double>();
    const std::string cls = cell.at("class").get<std::string>();
    if (m33 == -m13 - 1)
      CHECK(cls == "nontypical-class-1");
    else if (m33 == -m23)
      CHECK(cls == "nontypical-class-2");
    else
      CHECK(cls == "typical");
  }
}

TEST_CASE("empty scan range exits cleanly") {
  const auto r = run_cli("scan --d 5:3 --m33 0:0 --q-list 1.7");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).at("cells").empty());
}

TEST_CASE("dump emits a single matrix as csv") {
  const auto r = run_cli("dump --weight 0,0,2.5 --generator E32 --format csv");
  REQUIRE(r.exit_code == 0);
  // 4x4 matrix: four comma-separated rows
  int rows = 0;
  std::stringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("tensor decomposes the theta components") {
  const auto r = run_cli("tensor --left T1 --weight 1,0,0");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.at("summands").size() == 2);
  CHECK(j.at("summands").at(0).at("signature") == json::array({1, -1, 1.0}));
  CHECK(j.at("summands").at(1).at("signature") == json::array({0, 0, 1.0}));
}

TEST_CASE("environment variable overrides the default tolerance") {
  const std::string cmd = std::string("env UQGL_TOLERANCE=abc ") +
                          UQGL_CLI_PATH +
                          " verify --weight 1,0,5 > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 2);

  const std::string cmd2 = std::string("env UQGL_TOLERANCE=1e-6 ") +
                           UQGL_CLI_PATH +
                           " verify --weight 1,0,5 > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
}

TEST_CASE("json output round-trips through a file") {
  const std::string path = "/tmp/uqgl_cli_roundtrip.json";
  const auto r = run_cli("build --weight 2,0,1 --out " + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  json j;
  in >> j;
  CHECK(j.at("schema") == "uqgl.representation/1");
  CHECK(j.at("dimensions").at("total") == 12);
  std::remove(path.c_str());
}
