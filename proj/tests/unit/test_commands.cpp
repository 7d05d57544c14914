#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "flatcheck/commands.hpp"

using namespace flatcheck;

namespace {

std::string read_problem(const std::string& name) {
  std::ifstream in(std::string(FLATCHECK_PROBLEMS_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

const HypothesisText* hypothesis(const Report& r, const std::string& name) {
  for (const auto& h : r.hypotheses)
    if (h.name == name) return &h;
  return nullptr;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("gb command") {
  Config config;
  config.order = "lex";
  auto report = run_command("gb", read_problem("ideals.flat"), config);
  CHECK(report.status == "ok");
  REQUIRE(report.ideals.size() == 2);
  CHECK(report.ideals[0].name == "K");
  CHECK(report.ideals[0].generators == std::vector<std::string>{"x - y", "y^2 - 1"});
  CHECK(report.exit_code() == 0);
}

TEST_CASE("primdec command") {
  auto report = run_command("primdec", read_problem("ideals.flat"), Config{});
  CHECK(report.status == "ok");
  std::set<std::string> primes_of_m;
  for (const auto& c : report.components)
    if (c.ideal == "M") primes_of_m.insert(c.prime.generators.size() == 1 ? "line" : "point");
  CHECK(primes_of_m == std::set<std::string>{"line", "point"});
}

TEST_CASE("eliminate and contract commands") {
  Config config;
  config.eliminate = {"u"};
  auto cover = "ideal L = Q[y1,y2,u] / (y1 + 3*u^2, y2 - 2*u^3);";
  auto report = run_command("eliminate", cover, config);
  CHECK(report.status == "ok");
  REQUIRE(report.ideals.size() == 1);
  CHECK(report.ideals[0].generators == std::vector<std::string>{"y1^3 + 27/4*y2^2"});

  auto missing = run_command("eliminate", cover, Config{});
  CHECK(missing.status == "error");

  auto contract = run_command("contract", read_problem("douady.flat"), Config{});
  CHECK(contract.status == "ok");
  CHECK_FALSE(contract.ideals.empty());
}

TEST_CASE("hypotheses command on the Douady file") {
  auto report = run_command("hypotheses", read_problem("douady.flat"), Config{});
  CHECK(report.status == "ok");
  for (const char* name : {"base_prime", "base_dimension", "cover_dimension", "cover_dominant", "cover_regular"}) {
    CAPTURE(name);
    const auto* h = hypothesis(report, name);
    REQUIRE(h);
    CHECK(h->status == "passed");
  }
  const auto* irreducible = hypothesis(report, "analytically_irreducible");
  REQUIRE(irreducible);
  CHECK(irreducible->status == "user_asserted");
}

TEST_CASE("check-flat command") {
  auto report = run_command("check-flat", read_problem("douady.flat"), Config{});
  CHECK(report.verdict == "NON_FLAT");
  REQUIRE_FALSE(report.witness.empty());
  CHECK(report.witness[0].contraction.generators == std::vector<std::string>{"y1", "y2"});
  CHECK(report.exit_code() == 0);

  auto flat = run_command("check-flat", read_problem("free-module.flat"), Config{});
  CHECK(flat.verdict == "FLAT");
  CHECK(flat.exit_code() == 0);

  auto source = run_command("check-flat-regular-source", read_problem("blowup.flat"), Config{});
  CHECK(source.verdict == "NON_FLAT");
  CHECK(source.power == 3);
}

TEST_CASE("waivers and violations") {
  const std::string reducible =
      "ring R = Q[y1,y2] / (y1*y2);\n"
      "module A over R = Q[y1,y2,x] / (x - y1);\n";
  auto violated = run_command("check-flat", reducible, Config{});
  CHECK(violated.status == "error");
  REQUIRE(violated.error);
  CHECK(violated.error->kind == "hypothesis_violation");
  CHECK(violated.exit_code() == 2);

  Config waived;
  waived.waivers = {"base_prime"};
  auto run = run_command("check-flat", reducible, waived);
  CHECK(run.status == "ok");
  CHECK(run.verdict);
}

TEST_CASE("errors map to exit codes") {
  CHECK(run_command("check-flat", "ring R = Q[y];\nring R = Q[y];", Config{}).error->kind == "variable_clash");
  CHECK(run_command("gb", "ring R = Q[y];", Config{}).status == "ok");
  CHECK(run_command("nonsense", "ring R = Q[y];", Config{}).status == "error");
  Config tight;
  tight.max_degree = 2;
  CHECK(run_command("check-flat", read_problem("douady.flat"), tight).exit_code() == 3);
}

TEST_CASE("configuration files") {
  auto path = write_temp("flatcheck-config-test.json",
                         R"({"order": "lex", "seed": 7, "max_pairs": 500, "timeout": 2.5,
                             "format": "json", "waive": ["cover_regular"]})");
  auto config = load_config(path.string());
  CHECK(config.order == "lex");
  CHECK(config.seed == 7);
  CHECK(config.max_pairs == 500u);
  CHECK(config.timeout_seconds == 2.5);
  CHECK(config.format == "json");
  CHECK(config.waivers.count("cover_regular") == 1);
  CHECK(config.guards().max_pairs == 500u);

  auto bad = write_temp("flatcheck-config-bad.json", R"({"colour": "blue"})");
  CHECK_THROWS_AS(load_config(bad.string()), InvalidInput);
  auto broken = write_temp("flatcheck-config-broken.json", "{");
  CHECK_THROWS_AS(load_config(broken.string()), InvalidInput);
  CHECK_THROWS_AS(load_config("/nonexistent/flatcheck.json"), InvalidInput);

  ::setenv(kConfigEnvVar, path.c_str(), 1);
  CHECK(default_config().seed == 7);
  ::unsetenv(kConfigEnvVar);
  CHECK(default_config().seed == 1);

  std::filesystem::remove(path);
  std::filesystem::remove(bad);
  std::filesystem::remove(broken);
}
