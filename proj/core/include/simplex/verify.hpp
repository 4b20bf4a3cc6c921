#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace simplex {

enum class Suite { Fast, Full };

std::string to_string(Suite s);
/// "fast" or "full"; throws InvalidArgument otherwise.
Suite parse_suite(const std::string& s);

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  bool skipped = false;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0: none
  std::string detail;
  std::vector<std::pair<std::string, double>> metrics;
};

struct VerifyOptions {
  Suite suite = Suite::Fast;
  double budget_seconds = 0.0;  // 0: unlimited
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct VerifyReport {
  Suite suite = Suite::Fast;
  std::vector<CriterionResult> results;
  bool budget_exceeded = false;
  double seconds = 0.0;

  bool passed() const;
};

struct Criterion {
  std::string id;
  std::string title;
  bool fast = false;  // part of the fast suite
  std::function<CriterionResult(const VerifyOptions&)> run;
};

/// Every acceptance criterion, in report order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs the suite. Once the budget is spent the remaining criteria are
/// reported as skipped and budget_exceeded is set.
VerifyReport run_acceptance(const VerifyOptions& options,
                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  1  title  (1.23 s)  detail".
std::string format_result(const CriterionResult& r);
std::string report_to_json(const VerifyReport& report, int indent = 2);

}  // namespace simplex
