#include "simplex/error.hpp"

namespace simplex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::BadDistribution: return "BadDistribution";
    case ErrorCode::NonPositiveFitness: return "NonPositiveFitness";
    case ErrorCode::BadFitness: return "BadFitness";
    case ErrorCode::BadInitialComplex: return "BadInitialComplex";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::StaleHandle: return "StaleHandle";
    case ErrorCode::EmptyIndex: return "EmptyIndex";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::EmptyStar: return "EmptyStar";
    case ErrorCode::TraceTooShort: return "TraceTooShort";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::TypeSpaceTooLarge: return "TypeSpaceTooLarge";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroMeanFitness: return "ZeroMeanFitness";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InsufficientSupport: return "InsufficientSupport";
    case ErrorCode::NoOverlap: return "NoOverlap";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

namespace {

std::string join_issues(const std::vector<Issue>& issues) {
  std::string out = std::to_string(issues.size()) + " issue(s)";
  for (const auto& i : issues) {
    out += "\n  ";
    out += to_string(i.code);
    out += ": ";
    out += i.message;
  }
  return out;
}

ErrorCode first_code(const std::vector<Issue>& issues) {
  return issues.empty() ? ErrorCode::InvalidArgument : issues.front().code;
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(first_code(issues), join_issues(issues)), issues_(std::move(issues)) {}

}  // namespace simplex
