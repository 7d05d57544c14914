#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "flatcheck/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw flatcheck::InvalidInput("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

flatcheck::Report run_file(const std::string& command, const std::string& path,
                           const flatcheck::Config& config) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const flatcheck::Error& e) {
    flatcheck::Report report;
    report.command = command;
    report.source = path;
    report.tool_version = flatcheck::tool_version();
    report.seed = config.seed;
    report.status = "error";
    report.error = flatcheck::ErrorText{"io_error", e.what(), std::nullopt, {}};
    return report;
  }
  return flatcheck::run_command(command, text, config, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flatness checking by torsion in fibred powers, with the ideal-theoretic "
               "toolkit behind it"};
  app.set_version_flag("--version", flatcheck::tool_version());

  std::string command;
  std::vector<std::string> files;
  std::string config_path;
  std::optional<std::string> order, format;
  std::optional<double> timeout;
  std::optional<std::uint64_t> max_degree, max_pairs, seed;
  std::vector<std::string> waivers, drop;
  bool verify_regular = false;
  unsigned jobs = 1;

  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(flatcheck::command_names()));
  app.add_option("files", files, "Problem files")->required();
  app.add_option("--config", config_path,
                 std::string("JSON configuration file (default: $") + flatcheck::kConfigEnvVar + ")");
  app.add_option("--order", order, "Monomial order for gb")
      ->check(CLI::IsMember({"lex", "degrevlex"}));
  app.add_option("--timeout", timeout, "Wall-time limit per file in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", max_degree, "Largest S-polynomial degree");
  app.add_option("--max-pairs", max_pairs, "Largest number of critical pairs");
  app.add_option("--seed", seed, "Seed for generic coordinate changes");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--waive-hypothesis", waivers, "Tolerate a failed hypothesis (repeatable)");
  app.add_option("--drop", drop, "Variables removed by eliminate")->delimiter(',');
  app.add_flag("--verify-source-regularity", verify_regular,
               "Check regularity of the source by the Jacobian criterion");
  app.add_option("--jobs", jobs, "Files processed concurrently")->check(CLI::Range(1u, 256u));

  CLI11_PARSE(app, argc, argv);

  flatcheck::Config config;
  try {
    config = config_path.empty() ? flatcheck::default_config()
                                 : flatcheck::load_config(config_path);
  } catch (const flatcheck::Error& e) {
    std::cerr << "flatcheck: " << e.what() << "\n";
    return 2;
  }
  if (order) config.order = *order;
  if (format) config.format = *format;
  if (timeout) config.timeout_seconds = *timeout;
  if (max_degree) config.max_degree = *max_degree;
  if (max_pairs) config.max_pairs = *max_pairs;
  if (seed) config.seed = *seed;
  config.waivers.insert(waivers.begin(), waivers.end());
  config.eliminate = drop;
  config.verify_source_regularity = verify_regular;
  if (config.format != "text" && config.format != "json") {
    std::cerr << "flatcheck: unknown format '" << config.format << "'\n";
    return 2;
  }

  std::vector<flatcheck::Report> reports(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++)
      reports[i] = run_file(command, files[i], config);
  };
  std::vector<std::thread> pool;
  const unsigned threads = std::min<std::size_t>(jobs, files.size());
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const auto fmt = config.format == "json" ? flatcheck::ReportFormat::json
                                           : flatcheck::ReportFormat::text;
  std::cout << flatcheck::render_reports(reports, fmt);
  int code = 0;
  for (const auto& r : reports) code = std::max(code, r.exit_code());
  return code;
}
