#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flatcheck/report.hpp"

namespace flatcheck {

/// Environment variable naming the default configuration file.
inline constexpr const char* kConfigEnvVar = "FLATCHECK_CONFIG";

struct Config {
  /// "lex" or "degrevlex": order of the bases printed by `gb`.
  std::string order = "degrevlex";
  std::optional<double> timeout_seconds;
  std::optional<std::uint64_t> max_degree;
  std::optional<std::uint64_t> max_pairs;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::set<std::string> waivers;
  /// Variables removed by `eliminate`.
  std::vector<std::string> eliminate;
  /// Regular-source mode: check regularity of A by the Jacobian criterion.
  bool verify_source_regularity = false;

  Guards guards() const;
};

/// Reads a json configuration ({"order": ..., "timeout": ..., "max_degree": ...,
/// "max_pairs": ..., "seed": ..., "format": ..., "waive": [...]}) on top of
/// `base`. Throws InvalidInput for unknown keys or malformed files.
Config load_config(const std::string& path, Config base = {});
/// Defaults, overlaid with the file named by FLATCHECK_CONFIG when set.
Config default_config();

const std::vector<std::string>& command_names();

/// Runs `command` on the problem text. Never throws for library errors:
/// they become reports with status "error" or "guard_exceeded".
Report run_command(const std::string& command, const std::string& text, const Config& config,
                   const std::string& source = "");

}  // namespace flatcheck
