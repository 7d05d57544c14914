#include "flatcheck/errors.hpp"
#include "flatcheck/guards.hpp"

#include <sstream>

namespace flatcheck {

namespace {

std::string format_parse_error(const SourceSpan& span, const std::string& message,
                               const std::vector<std::string>& expected) {
  std::ostringstream out;
  out << span.line << ":" << span.column << ": " << message;
  if (!expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out << (i + 1 == expected.size() ? " or " : ", ");
      out << expected[i];
    }
    out << ")";
  }
  return out.str();
}

thread_local Guards active_guards{};

}  // namespace

ParseError::ParseError(SourceSpan span, std::string message, std::vector<std::string> expected)
    : Error(format_parse_error(span, message, expected)),
      span_(span),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

VariableClash::VariableClash(SourceSpan span, const std::string& message)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      span_(span) {}

Guards Guards::with_timeout(std::chrono::duration<double> timeout) {
  Guards g;
  g.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(timeout);
  return g;
}

void Guards::check_time() const {
  if (deadline && Clock::now() > *deadline) {
    throw GuardExceeded("timeout", "wall-time limit reached");
  }
}

const Guards& current_guards() { return active_guards; }

GuardScope::GuardScope(Guards guards) : previous_(active_guards) { active_guards = guards; }

GuardScope::~GuardScope() { active_guards = previous_; }

}  // namespace flatcheck
