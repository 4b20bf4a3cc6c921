// Acceptance runner: one PASS/FAIL line per criterion. Thresholds live in
// core/src/verify.cpp next to each check.

#include <iostream>

#include "CLI11.hpp"
#include "simplex/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string suite = "full";
  double budget = 0.0;
  std::uint64_t seed = 0;
  app.add_option("--suite", suite, "fast or full");
  app.add_option("--budget", budget, "seconds, 0 for none");
  app.add_option("--seed", seed, "base seed");
  CLI11_PARSE(app, argc, argv);

  simplex::VerifyOptions o;
  try {
    o.suite = simplex::parse_suite(suite);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  o.budget_seconds = budget;
  o.seed = seed;
  const auto rep = simplex::run_acceptance(
      o, [](const simplex::CriterionResult& r) { std::cout << simplex::format_result(r) << std::endl; });
  std::size_t passed = 0;
  for (const auto& r : rep.results) passed += r.passed ? 1 : 0;
  std::cout << passed << '/' << rep.results.size() << " criteria passed in " << rep.seconds
            << " s\n";
  return rep.passed() ? 0 : 3;
}
