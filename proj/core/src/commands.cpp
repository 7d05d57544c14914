#include "flatcheck/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "flatcheck/dsl.hpp"
#include "json.hpp"

namespace flatcheck {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// The ideals a standalone command works on: declared ideals, else the
/// module, else the base.
std::vector<std::pair<std::string, Ideal>> targets(const ProblemFile& file) {
  if (!file.ideals.empty()) return file.ideals;
  if (file.module) {
    const auto* d = file.find("module");
    return {{d ? d->name : "module", file.module->I}};
  }
  if (file.base) {
    const auto* d = file.find("ring");
    return {{d ? d->name : "base", file.base->q}};
  }
  throw InvalidInput("the problem file declares no ideal");
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "degrevlex") return MonomialOrder::degrevlex();
  throw InvalidInput("unknown monomial order '" + name + "' (expected lex or degrevlex)");
}

void run_gb(Report& report, const ProblemFile& file, const Config& config) {
  const auto order = parse_order(config.order);
  for (const auto& [name, ideal] : targets(file)) {
    auto basis = ideal.groebner(order);
    IdealText text{name, ideal.ring()->describe() + " " + config.order, {}};
    for (const auto& g : basis->generators) text.generators.push_back(g.to_string());
    report.ideals.push_back(std::move(text));
  }
}

void run_primdec(Report& report, const ProblemFile& file, const DecompositionOptions& options) {
  for (const auto& [name, ideal] : targets(file)) {
    DecompositionStats stats;
    auto components = decompose(ideal, options, &stats);
    report.retries += stats.retries;
    for (const auto& c : components)
      report.components.push_back(ComponentText{name, IdealText::of("primary", c.primary),
                                                IdealText::of("prime", c.prime)});
  }
}

void run_eliminate(Report& report, const ProblemFile& file, const Config& config) {
  if (config.eliminate.empty())
    throw InvalidInput("eliminate needs the variables to drop (--drop v1,v2)");
  for (const auto& [name, ideal] : targets(file))
    report.ideals.push_back(IdealText::of(name, eliminate(ideal, config.eliminate)));
}

void run_contract(Report& report, const ProblemFile& file) {
  if (!file.base) throw InvalidInput("contract needs a base ring declaration");
  std::vector<std::pair<std::string, Ideal>> list = file.ideals;
  if (list.empty() && file.module) list.emplace_back(file.find("module")->name, file.module->I);
  if (list.empty() && file.cover) list.emplace_back(file.find("cover")->name, file.cover->L);
  if (list.empty()) throw InvalidInput("contract needs an ideal, module or cover");
  for (const auto& [name, ideal] : list)
    report.ideals.push_back(IdealText::of(name, contract_to_base(ideal, file.base->ambient)));
}

void record_error(Report& report, const std::string& kind, const std::string& message,
                  std::optional<SourceSpan> span = std::nullopt,
                  std::vector<std::string> expected = {}) {
  report.status = "error";
  report.error = ErrorText{kind, message, span, std::move(expected)};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read configuration file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Guards Config::guards() const {
  Guards g = timeout_seconds ? Guards::with_timeout(std::chrono::duration<double>(*timeout_seconds))
                             : Guards{};
  if (max_degree) g.max_degree = *max_degree;
  if (max_pairs) g.max_pairs = static_cast<std::size_t>(*max_pairs);
  return g;
}

Config load_config(const std::string& path, Config base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("malformed configuration '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw InvalidInput("configuration '" + path + "' must be a json object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "order") {
        base.order = value.get<std::string>();
        parse_order(base.order);
      } else if (key == "timeout") {
        base.timeout_seconds = value.get<double>();
      } else if (key == "max_degree") {
        base.max_degree = value.get<std::uint64_t>();
      } else if (key == "max_pairs") {
        base.max_pairs = value.get<std::uint64_t>();
      } else if (key == "seed") {
        base.seed = value.get<std::uint64_t>();
      } else if (key == "format") {
        base.format = value.get<std::string>();
      } else if (key == "waive") {
        for (const auto& w : value) base.waivers.insert(w.get<std::string>());
      } else {
        throw InvalidInput("unknown configuration key '" + key + "' in '" + path + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("bad value in configuration '" + path + "': " + e.what());
  }
  return base;
}

Config default_config() {
  const char* path = std::getenv(kConfigEnvVar);
  if (path == nullptr || *path == '\0') return Config{};
  return load_config(path);
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "check-flat", "check-flat-regular-source", "primdec", "gb", "eliminate", "contract",
      "hypotheses"};
  return names;
}

Report run_command(const std::string& command, const std::string& text, const Config& config,
                   const std::string& source) {
  Report report;
  report.command = command;
  report.source = source;
  report.tool_version = tool_version();
  report.seed = config.seed;
  const Guards guards = config.guards();
  report.guards.max_pairs = guards.max_pairs;
  report.guards.max_degree = guards.max_degree;
  report.guards.timeout_seconds = config.timeout_seconds;

  const auto start = Clock::now();
  try {
    GuardScope scope(guards);
    DecompositionOptions options;
    options.seed = config.seed;

    auto parse_start = Clock::now();
    const ProblemFile file = parse_problem(text, options);
    report.timings["parse"] = seconds_since(parse_start);

    if (command == "check-flat" || command == "check-flat-regular-source") {
      auto problem = file.problem(options, config.waivers);
      problem.verify_source_regularity = config.verify_source_regularity;
      const Verdict verdict = command == "check-flat" ? check_flatness(problem)
                                                       : check_flatness_regular_source(problem);
      fill_verdict(report, verdict);
    } else if (command == "hypotheses") {
      auto problem = file.problem(options, config.waivers);
      problem.verify_source_regularity = config.verify_source_regularity;
      fill_hypotheses(report, verify_hypotheses(problem));
    } else if (command == "primdec") {
      run_primdec(report, file, options);
    } else if (command == "gb") {
      run_gb(report, file, config);
    } else if (command == "eliminate") {
      run_eliminate(report, file, config);
    } else if (command == "contract") {
      run_contract(report, file);
    } else {
      throw InvalidInput("unknown command '" + command + "'");
    }
  } catch (const GuardExceeded& e) {
    report.status = "guard_exceeded";
    report.guards.tripped = e.guard();
    report.error = ErrorText{"guard_exceeded", e.what(), std::nullopt, {}};
  } catch (const ParseError& e) {
    record_error(report, "parse_error", e.what(), e.span(), e.expected());
  } catch (const VariableClash& e) {
    record_error(report, "variable_clash", e.what(), e.span());
  } catch (const HypothesisViolation& e) {
    record_error(report, "hypothesis_violation", e.what());
  } catch (const GenericityFailure& e) {
    record_error(report, "genericity_failure", e.what());
  } catch (const NotZeroDimensional& e) {
    record_error(report, "not_zero_dimensional", e.what());
  } catch (const InvalidInput& e) {
    record_error(report, "invalid_input", e.what());
  } catch (const Error& e) {
    record_error(report, "error", e.what());
  }
  report.timings["total"] = seconds_since(start);
  return report;
}

}  // namespace flatcheck
