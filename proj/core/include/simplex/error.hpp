#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simplex {

enum class ErrorCode {
  DimensionUnsupported,
  BadDistribution,
  NonPositiveFitness,
  BadFitness,
  BadInitialComplex,
  NonPositiveWeight,
  StaleHandle,
  EmptyIndex,
  EmptyComplex,
  EmptyStar,
  TraceTooShort,
  TooFewSamples,
  HypothesisViolated,
  TypeSpaceTooLarge,
  NoConvergence,
  ZeroMeanFitness,
  DomainError,
  InsufficientSupport,
  NoOverlap,
  InvalidArgument,
  IoError,
  ParseError,
  BudgetExceeded,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Issue {
  ErrorCode code;
  std::string message;

  bool operator==(const Issue&) const = default;
};

/// Thrown by validate_config; carries every violated invariant, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues);

  const std::vector<Issue>& issues() const noexcept { return issues_; }

 private:
  std::vector<Issue> issues_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::ParseError, message + " (line " + std::to_string(line) +
                                         ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace simplex
