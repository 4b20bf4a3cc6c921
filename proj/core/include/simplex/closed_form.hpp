#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "simplex/model_config.hpp"
#include "simplex/profile.hpp"
#include "simplex/weight_law.hpp"

namespace simplex {

/// Above this k the constant-fitness laws switch from the running product to
/// log-gamma.
inline constexpr int kProductCutoff = 64;

// Constant-fitness limits p_k, indexed by excess degree k (degree d + k).
// With d = 1 in Model A this is 2^{-(k+1)}, i.e. 2^{-m} for a vertex of degree m.

double pk_model_a_const(int d, int k);
double pk_model_a_product(int d, int k);
/// Throws DimensionUnsupported for d = 1 (no gamma form).
double pk_model_a_gamma(int d, int k);

/// d = 2 gives (1/3)(2/3)^k; with `printed` it gives 2^{k-1}/3^k instead, a
/// variant that sums to 3/2. Throws DimensionUnsupported for d <= 1.
double pk_model_b_const(int d, int k, bool printed = false);
double pk_model_b_product(int d, int k);
/// Throws DimensionUnsupported for d <= 2.
double pk_model_b_gamma(int d, int k);

double pk_const(Variant v, int d, int k, bool printed = false);

/// p_0..p_kmax of the constant-fitness law.
DegreeProfile closed_form_profile(Variant v, int d, int k_max, bool printed = false);

/// lambda = E f(W). Throws ZeroMeanFitness when it is not positive.
double lambda_wrt(const WeightLaw& mu, const std::function<double(double)>& f);

/// Weighted recursive tree (d = 1, Model A):
/// p_k = E[ lambda f(W)^k / (f(W) + lambda)^{k+1} ].
double pk_wrt(const WeightLaw& mu, const std::function<double(double)>& f, int k);

/// p_0..p_kmax of the weighted recursive tree for a d = 1 Model A config.
/// Throws DimensionUnsupported otherwise.
DegreeProfile wrt_profile(const ModelConfig& cfg, int k_max);

/// Gamma(t + a) / Gamma(t). Throws DomainError for t <= 0.
double gamma_ratio_asymptotic(double t, double a);

struct TailBounds {
  double lower = 0.0;  // liminf of log p_k / log k is at least this
  double upper = 0.0;  // limsup of log p_k / log k is at most this
  double lambda = 0.0;
  double f_min = 0.0;
  double f_max = 0.0;
  Variant variant = Variant::A;
  int d = 0;
  std::optional<double> lambda_star;
  /// A bound above -2 contradicts sum_k k p_k <= d; reported, not enforced.
  bool above_minus_two = false;
  std::vector<std::string> warnings;
};

/// lower = -(1 + lambda / (c f_min)), upper = -(1 + lambda / (c f_max)) with
/// c = d - 1 (A) or d - 2 (B). A supplied lambda* replaces the lower bound by
/// -(1 + lambda / lambda*). Throws HypothesisViolated when c = 0.
TailBounds tail_exponent_bounds(const ModelConfig& cfg, double lambda,
                                std::optional<double> lambda_star = std::nullopt);

}  // namespace simplex
