#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatcheck {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
  std::size_t length = 0;
};

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched rings, duplicate or unknown variable names.
class VariableClash : public Error {
 public:
  using Error::Error;
  /// Clash located in a problem file.
  VariableClash(SourceSpan span, const std::string& message);

  const std::optional<SourceSpan>& span() const noexcept { return span_; }

 private:
  std::optional<SourceSpan> span_;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A resource cap (pairs, degree, time, recombination) was hit. The
/// computation is abandoned; no partial answer is ever returned.
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::string guard, const std::string& detail)
      : Error("guard exceeded: " + guard + " (" + detail + ")"), guard_(std::move(guard)) {}
  const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

/// Random linear forms kept landing in non-generic position.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string message, std::vector<std::string> expected = {});

  const SourceSpan& span() const noexcept { return span_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

}  // namespace flatcheck
