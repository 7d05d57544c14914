#include <fstream>
#include <sstream>

#include "doctest.h"
#include "flatcheck/commands.hpp"
#include "json.hpp"

using namespace flatcheck;

namespace {

std::string read_problem(const std::string& name) {
  std::ifstream in(std::string(FLATCHECK_PROBLEMS_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

Report without_timings(Report r) {
  r.timings.clear();
  return r;
}

}  // namespace

TEST_CASE("text reports") {
  Config config;
  auto flat = run_command("check-flat", read_problem("free-module.flat"), config, "free-module.flat");
  auto text = render_report(flat, ReportFormat::text);
  CHECK(text.find("FLAT") != std::string::npos);
  CHECK(text.find("n = 2") != std::string::npos);

  auto douady = run_command("check-flat", read_problem("douady.flat"), config);
  CHECK(render_report(douady, ReportFormat::text).find("NON_FLAT") != std::string::npos);
}

TEST_CASE("json reports") {
  Config config;
  auto douady = run_command("check-flat", read_problem("douady.flat"), config, "douady.flat");
  auto json = nlohmann::json::parse(render_report(douady, ReportFormat::json));
  for (const char* key : {"schema_version", "command", "verdict", "witness", "hypotheses", "guards", "seed", "timings"})
    CHECK(json.contains(key));
  CHECK(json["schema_version"] == kReportSchemaVersion);
  CHECK(json["verdict"] == "NON_FLAT");
  REQUIRE(json["witness"].is_array());
  REQUIRE_FALSE(json["witness"].empty());
  const auto& w = json["witness"][0];
  CHECK(w["contraction"]["generators"] == nlohmann::json::array({"y1", "y2"}));
  CHECK(w["prime"]["generators"].is_array());
  CHECK(w["prime"]["generators"][0].is_string());
}

TEST_CASE("json reports round-trip") {
  Config config;
  for (const char* name : {"douady.flat", "blowup.flat", "free-module.flat", "ideals.flat"}) {
    CAPTURE(name);
    for (const char* command : {"check-flat", "hypotheses", "primdec", "gb"}) {
      auto report = run_command(command, read_problem(name), config, name);
      auto json = render_report(report, ReportFormat::json);
      auto back = parse_report_json(json);
      CHECK(back == report);
      CHECK(render_report(back, ReportFormat::json) == json);
    }
  }
  CHECK_THROWS_AS(parse_report_json("{"), InvalidInput);
  CHECK_THROWS_AS(parse_report_json("[1, 2]"), InvalidInput);
}

TEST_CASE("reports are deterministic apart from timings") {
  Config config;
  config.seed = 5;
  auto text = read_problem("douady.flat");
  auto a = run_command("check-flat", text, config, "douady.flat");
  auto b = run_command("check-flat", text, config, "douady.flat");
  CHECK(without_timings(a) == without_timings(b));
  CHECK(render_report(without_timings(a), ReportFormat::json) ==
        render_report(without_timings(b), ReportFormat::json));
  CHECK(a.seed == 5);
}

TEST_CASE("guard reports") {
  Config config;
  config.max_pairs = 1;
  auto report = run_command("check-flat", read_problem("douady.flat"), config);
  CHECK(report.status == "guard_exceeded");
  CHECK(report.guards.tripped == "max_pairs");
  CHECK(report.exit_code() == 3);
  auto json = nlohmann::json::parse(render_report(report, ReportFormat::json));
  CHECK(json["status"] == "guard_exceeded");
  CHECK(json["guards"]["tripped"] == "max_pairs");
  CHECK(render_report(report, ReportFormat::text).find("max_pairs") != std::string::npos);
}

TEST_CASE("error reports carry spans") {
  auto report = run_command("check-flat", "ring R = Q[y1 y2];", Config{});
  CHECK(report.status == "error");
  CHECK(report.exit_code() == 2);
  REQUIRE(report.error);
  CHECK(report.error->kind == "parse_error");
  REQUIRE(report.error->span);
  CHECK(report.error->span->column == 15);
  CHECK(parse_report_json(render_report(report, ReportFormat::json)) == report);
}

TEST_CASE("several reports render as one document") {
  Config config;
  std::vector<Report> reports{run_command("gb", read_problem("ideals.flat"), config),
                              run_command("check-flat", read_problem("blowup.flat"), config)};
  auto json = nlohmann::json::parse(render_reports(reports, ReportFormat::json));
  REQUIRE(json.is_array());
  CHECK(json.size() == 2);
}
