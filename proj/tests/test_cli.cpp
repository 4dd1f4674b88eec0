#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(YBLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

// structural validation against the committed schema: required keys, types,
// enumerated values
void validate_report(const nlohmann::json& j) {
  std::ifstream f(std::string(YBLAB_DOCS_DIR) + "/report.schema.json");
  REQUIRE(f.good());
  nlohmann::json schema = nlohmann::json::parse(f);

  for (const auto& key : schema["required"]) REQUIRE(j.contains(key.get<std::string>()));
  CHECK(j["schema_version"] == schema["properties"]["schema_version"]["const"]);
  CHECK(j["tool"]["name"].is_string());
  CHECK(j["tool"]["version"].is_string());
  CHECK(j["config"]["command"].is_string());
  CHECK(j["config"]["threads"].is_number_integer());
  CHECK(j["wall_clock_ms"].is_number_integer());
  CHECK(j["all_passed"].is_boolean());
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    for (const auto& key : schema["properties"]["checks"]["items"]["required"])
      REQUIRE(c.contains(key.get<std::string>()));
    bool status_ok = c["status"] == "pass" || c["status"] == "fail";
    CHECK(status_ok);
    CHECK(c["witnesses"].is_array());
    for (const auto& w : c["witnesses"]) {
      CHECK(w["candidate"].is_string());
      CHECK(w["residual_support"].is_number_integer());
    }
  }
}

}  // namespace

TEST_CASE("enumerate count matches the bitransitive number") {
  RunResult r = run_cli("enumerate --matrices --n 2 --colors 2 --count-only");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "10\n");
}

TEST_CASE("table csv is byte-stable and matches the frozen prefix") {
  RunResult a = run_cli("table --stirling --n-max 5");
  RunResult b = run_cli("table --stirling --n-max 5");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output == "n\\k,1,2,3,4\n2,1,,,\n3,1,2,,\n4,1,11,5,\n5,1,59,69,14\n");
}

TEST_CASE("verify emits a schema-valid report and exit code 0") {
  RunResult r = run_cli("verify --suite semiclassical");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  validate_report(j);
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() == 2);
}

TEST_CASE("verify a scan suite with counts") {
  RunResult r = run_cli("verify --suite conj-cybe --family standard-classical --n 3");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  validate_report(j);
  CHECK(j["checks"][0]["total"] == 74);
  CHECK(j["checks"][0]["passed"] == 74);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("verify --suite nosuch").exit_code == 2);
  CHECK(run_cli("enumerate --n 2").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("table").exit_code == 2);
}

TEST_CASE("list-suites is stable and contains the catalog anchors") {
  RunResult a = run_cli("list-suites");
  RunResult b = run_cli("list-suites");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("conj-qybe (Conjecture: transitive matrices, 'solves QYBE')") != std::string::npos);
  CHECK(a.output.find("table-1 (Table: generalized Stirling numbers") != std::string::npos);
}
