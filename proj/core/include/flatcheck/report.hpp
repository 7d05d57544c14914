#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "flatcheck/errors.hpp"
#include "flatcheck/flatness.hpp"

namespace flatcheck {

inline constexpr int kReportSchemaVersion = 1;

std::string tool_version();

/// An ideal as printed text: reduced generators over a named ring.
struct IdealText {
  std::string name;
  std::string ring;
  std::vector<std::string> generators;

  static IdealText of(const std::string& name, const Ideal& ideal);
  friend bool operator==(const IdealText&, const IdealText&) = default;
};

struct ComponentText {
  std::string ideal;
  IdealText primary;
  IdealText prime;
  friend bool operator==(const ComponentText&, const ComponentText&) = default;
};

struct WitnessText {
  IdealText prime;
  IdealText contraction;
  std::string separator;
  std::string torsion_element;
  friend bool operator==(const WitnessText&, const WitnessText&) = default;
};

struct HypothesisText {
  std::string name;
  std::string status;
  std::string detail;
  friend bool operator==(const HypothesisText&, const HypothesisText&) = default;
};

struct GuardText {
  std::uint64_t max_pairs = 0;
  std::uint64_t max_degree = 0;
  std::optional<double> timeout_seconds;
  /// Name of the guard that stopped the run, if any.
  std::string tripped;
  friend bool operator==(const GuardText&, const GuardText&) = default;
};

struct ErrorText {
  std::string kind;
  std::string message;
  std::optional<SourceSpan> span;
  std::vector<std::string> expected;
  friend bool operator==(const ErrorText& a, const ErrorText& b) {
    auto key = [](const ErrorText& e) {
      return std::make_tuple(e.kind, e.message, e.span.has_value(),
                             e.span ? e.span->line : 0, e.span ? e.span->column : 0,
                             e.span ? e.span->offset : 0, e.span ? e.span->length : 0, e.expected);
    };
    return key(a) == key(b);
  }
};

/// Result of one command on one problem file.
struct Report {
  int schema_version = kReportSchemaVersion;
  std::string command;
  std::string source;
  /// "ok", "error" or "guard_exceeded".
  std::string status = "ok";
  std::string tool_version;

  std::optional<std::string> verdict;
  int power = 0;
  bool power_overridden = false;
  std::string cover_mode;
  std::vector<WitnessText> witness;
  std::vector<HypothesisText> hypotheses;
  /// Associated primes of the tested ideal, each with its contraction.
  std::vector<std::pair<IdealText, IdealText>> associated;
  std::vector<std::pair<std::string, std::string>> renaming;

  /// Ideals produced by gb / eliminate / contract, the fibred ideal for
  /// check-flat.
  std::vector<IdealText> ideals;
  std::vector<ComponentText> components;
  std::vector<std::string> notes;

  GuardText guards;
  std::uint64_t seed = 0;
  unsigned retries = 0;
  std::map<std::string, double> timings;
  std::optional<ErrorText> error;

  /// Process exit code: 0 completed, 2 error, 3 guard exceeded.
  int exit_code() const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Copies verdict data into the report.
void fill_verdict(Report& report, const Verdict& verdict);
void fill_hypotheses(Report& report, const HypothesisReport& hypotheses);

enum class ReportFormat { text, json };

/// Deterministic rendering; json is stable-keyed and schema-versioned.
std::string render_report(const Report& report, ReportFormat format);
/// Several reports: one json array, or text blocks separated by blank lines.
std::string render_reports(const std::vector<Report>& reports, ReportFormat format);

/// Inverse of the json rendering. Throws InvalidInput on malformed input.
Report parse_report_json(const std::string& text);

}  // namespace flatcheck
