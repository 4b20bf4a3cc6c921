#include "simplex/closed_form.hpp"

#include <cmath>

#include "simplex/hypotheses.hpp"

namespace simplex {

namespace {

void check_k(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 0");
}

// prefactor * prod_{j<k} (c j + num) / (c j + den), last factor c k + den.
double product_form(double c, double num, double den, double top, int k) {
  double p = top / (c * k + den);
  for (int j = 0; j < k; ++j) p *= (c * j + num) / (c * j + den);
  return p;
}

// pre * Gamma(k + a) Gamma(b) / (Gamma(k + 1 + b) Gamma(a)).
double gamma_form(double pre, double a, double b, int k) {
  const double kk = static_cast<double>(k);
  return pre * std::exp(std::lgamma(kk + a) + std::lgamma(b) - std::lgamma(kk + 1.0 + b) -
                        std::lgamma(a));
}

}  // namespace

double pk_model_a_product(int d, int k) {
  check_k(k);
  if (d < 1) throw Error(ErrorCode::DimensionUnsupported, "Model A needs d >= 1");
  return product_form(d - 1, d, 2.0 * d, d, k);
}

double pk_model_a_gamma(int d, int k) {
  check_k(k);
  if (d < 2) throw Error(ErrorCode::DimensionUnsupported, "gamma form needs d >= 2");
  const double c = d - 1;
  return gamma_form(1.0 + 1.0 / c, d / c, 2.0 * d / c, k);
}

double pk_model_a_const(int d, int k) {
  check_k(k);
  if (d == 1) return std::ldexp(1.0, -(k + 1));
  return k > kProductCutoff ? pk_model_a_gamma(d, k) : pk_model_a_product(d, k);
}

double pk_model_b_product(int d, int k) {
  check_k(k);
  if (d < 2) throw Error(ErrorCode::DimensionUnsupported, "Model B needs d >= 2");
  return product_form(d - 2, d, 2.0 * d - 1, d - 1, k);
}

double pk_model_b_gamma(int d, int k) {
  check_k(k);
  if (d < 3) throw Error(ErrorCode::DimensionUnsupported, "gamma form needs d >= 3");
  const double c = d - 2;
  return gamma_form(1.0 + 1.0 / c, d / c, (2.0 * d - 1) / c, k);
}

double pk_model_b_const(int d, int k, bool printed) {
  check_k(k);
  if (d < 2) throw Error(ErrorCode::DimensionUnsupported, "Model B needs d >= 2");
  if (d == 2) {
    if (printed) return std::pow(2.0, k - 1) / std::pow(3.0, k);
    return std::pow(2.0 / 3.0, k) / 3.0;
  }
  return k > kProductCutoff ? pk_model_b_gamma(d, k) : pk_model_b_product(d, k);
}

double pk_const(Variant v, int d, int k, bool printed) {
  return v == Variant::A ? pk_model_a_const(d, k) : pk_model_b_const(d, k, printed);
}

DegreeProfile closed_form_profile(Variant v, int d, int k_max, bool printed) {
  if (k_max < 0) throw Error(ErrorCode::InvalidArgument, "k_max must be >= 0");
  DegreeProfile prof;
  prof.provenance = Provenance::ClosedForm;
  prof.d = d;
  prof.n = 0;
  prof.replicas = 0;
  for (int k = 0; k <= k_max; ++k) prof.entries.push_back({k, 0.0, pk_const(v, d, k, printed), 0.0});
  return prof;
}

double lambda_wrt(const WeightLaw& mu, const std::function<double(double)>& f) {
  const double lambda = mu.expect(f);
  if (!(lambda > 0.0)) throw Error(ErrorCode::ZeroMeanFitness, "E f(W) must be positive");
  return lambda;
}

double pk_wrt(const WeightLaw& mu, const std::function<double(double)>& f, int k) {
  check_k(k);
  const double lambda = lambda_wrt(mu, f);
  return mu.expect([&](double w) {
    const double fw = f(w);
    const double r = fw / (fw + lambda);
    return lambda / (fw + lambda) * std::pow(r, k);
  });
}

DegreeProfile wrt_profile(const ModelConfig& cfg, int k_max) {
  if (cfg.d != 1 || cfg.variant != Variant::A) {
    throw Error(ErrorCode::DimensionUnsupported, "weighted recursive tree needs d = 1, Model A");
  }
  if (k_max < 0) throw Error(ErrorCode::InvalidArgument, "k_max must be >= 0");
  const auto f = [&](double w) { return cfg.fitness(std::span<const double>(&w, 1)); };
  DegreeProfile prof;
  prof.provenance = Provenance::ClosedForm;
  prof.d = 1;
  prof.replicas = 0;
  for (int k = 0; k <= k_max; ++k) prof.entries.push_back({k, 0.0, pk_wrt(cfg.weights, f, k), 0.0});
  return prof;
}

double gamma_ratio_asymptotic(double t, double a) {
  if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "t must be > 0");
  if (!(t + a > 0.0)) throw Error(ErrorCode::DomainError, "t + a must be > 0");
  return std::exp(std::lgamma(t + a) - std::lgamma(t));
}

TailBounds tail_exponent_bounds(const ModelConfig& cfg, double lambda,
                                std::optional<double> lambda_star) {
  const int c = cfg.variant == Variant::A ? cfg.d - 1 : cfg.d - 2;
  if (c <= 0) {
    throw Error(ErrorCode::HypothesisViolated,
                cfg.variant == Variant::A ? "tail bounds need d > 1 in Model A"
                                          : "tail bounds need d > 2 in Model B");
  }
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  TailBounds tb;
  tb.variant = cfg.variant;
  tb.d = cfg.d;
  tb.lambda = lambda;
  const auto range = fitness_range(cfg);
  tb.f_min = range.min;
  tb.f_max = range.max;
  tb.lower = -(1.0 + lambda / (c * tb.f_min));
  tb.upper = -(1.0 + lambda / (c * tb.f_max));
  if (lambda_star) {
    if (!(*lambda_star > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda* must be positive");
    tb.lambda_star = lambda_star;
    tb.lower = -(1.0 + lambda / *lambda_star);
  }
  tb.above_minus_two = tb.lower > -2.0 || tb.upper > -2.0;
  const auto rep = check_hypotheses(cfg);
  if (!rep.h1star.passed() && !rep.h2star.passed()) {
    tb.warnings.push_back("neither H1* nor H2* holds; the bounds are not guaranteed");
  }
  if (tb.above_minus_two) tb.warnings.push_back("a bound lies above -2");
  return tb;
}

}  // namespace simplex
