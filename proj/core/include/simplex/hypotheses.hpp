#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplex/model_config.hpp"

namespace simplex {

enum class Verdict { Pass, Fail, Unknown };

std::string to_string(Verdict v);

struct HypothesisCheck {
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> reasons;

  bool passed() const noexcept { return verdict == Verdict::Pass; }
  bool operator==(const HypothesisCheck&) const = default;
};

/// H2 with the measured moment ratio E f(1_{0<-W}) / E f(0_{0<-W}).
struct H2Check : HypothesisCheck {
  double expected_at_one = 0.0;   // E f(1_{0<-W})
  double expected_at_zero = 0.0;  // E f(0_{0<-W})
  double ratio = 0.0;
  double threshold = 0.0;  // 1 + 1/d
  std::string comparison;  // "<" or ">="
  Monotonicity monotone = Monotonicity::Unknown;

  bool operator==(const H2Check&) const = default;
};

struct HypothesisReport {
  HypothesisCheck h1;
  H2Check h2;
  HypothesisCheck h1star;
  HypothesisCheck h2star;
  /// (1/(d-1)) log(1 + 1/d); absent for d < 2.
  std::optional<double> ngf_beta_threshold;

  bool operator==(const HypothesisReport&) const = default;
};

/// Report-only; never throws for a valid config. Pure in `cfg`.
HypothesisReport check_hypotheses(const ModelConfig& cfg);

/// Largest beta for which the energy-exp fitness satisfies the H2 moment
/// condition with weights w = 1 - epsilon. Throws DimensionUnsupported for d < 2.
double ngf_beta_threshold(int d);

/// |K_n^{(d-1)}| -> infinity: every d in Model A, d > 1 in Model B.
bool active_faces_unbounded(const ModelConfig& cfg);
/// |K_n^{(d-2)}| -> infinity: d > 1 in Model A, d > 2 in Model B.
bool codim_two_faces_unbounded(const ModelConfig& cfg);

struct FitnessRange {
  double min = 0.0;
  double max = 0.0;
};

/// f_min and f_max over types with coordinates in Supp(mu). Table fitness is
/// enumerated; the other kinds are coordinatewise monotone, so the two
/// constant corners attain the extremes.
FitnessRange fitness_range(const ModelConfig& cfg);

}  // namespace simplex
