#include <cmath>

#include "doctest.h"
#include "simplex/hypotheses.hpp"

using namespace simplex;

namespace {

ModelConfig finite_cfg(int d, Variant v) {
  ModelConfig cfg;
  cfg.d = d;
  cfg.variant = v;
  cfg.fitness = Fitness::product({ScalarMap::Kind::Identity, 0});
  cfg.weights = WeightLaw::finite({{0.5, 0.5}, {1.0, 0.5}});
  return validate_config(cfg);
}

ModelConfig energy_cfg(int d, double beta) {
  ModelConfig cfg;
  cfg.d = d;
  cfg.fitness = Fitness::energy_exp(beta);
  return validate_config(cfg);
}

}  // namespace

TEST_CASE("H1 and H1* for finite weights in Model A, d=2") {
  const auto rep = check_hypotheses(finite_cfg(2, Variant::A));
  CHECK(rep.h1.verdict == Verdict::Pass);
  CHECK(rep.h1star.verdict == Verdict::Pass);
}

TEST_CASE("H1* fails for Model B with d=2") {
  const auto rep = check_hypotheses(finite_cfg(2, Variant::B));
  CHECK(rep.h1.verdict == Verdict::Pass);
  CHECK(rep.h1star.verdict == Verdict::Fail);
  CHECK(rep.h2.verdict == Verdict::Fail);  // H2 is a Model A hypothesis
}

TEST_CASE("continuous weights fail H1") {
  ModelConfig cfg;
  CHECK(check_hypotheses(cfg).h1.verdict == Verdict::Fail);
}

TEST_CASE("energy-exp with beta=0 passes H2 with ratio 1") {
  const auto rep = check_hypotheses(energy_cfg(2, 0.0));
  CHECK(rep.h2.verdict == Verdict::Pass);
  CHECK(rep.h2.ratio == doctest::Approx(1.0));
  CHECK(rep.h2.comparison == "<");
  CHECK(rep.h2.threshold == doctest::Approx(1.5));
}

TEST_CASE("H2 boundary for energy-exp sits at the NGF beta threshold") {
  // The moment ratio for exp(-beta sum(1-x)) is exp(beta (d-1)), so H2 holds
  // exactly for beta below log(1 + 1/d)/(d - 1).
  for (int d = 2; d <= 5; ++d) {
    const double b = ngf_beta_threshold(d);
    const auto below = check_hypotheses(energy_cfg(d, 0.99 * b));
    const auto above = check_hypotheses(energy_cfg(d, 1.01 * b));
    CHECK(below.h2.ratio == doctest::Approx(std::exp(0.99 * b * (d - 1))).epsilon(1e-9));
    CHECK(below.h2.verdict == Verdict::Pass);
    CHECK(above.h2.verdict == Verdict::Fail);
    CHECK(above.h2.comparison == ">=");
  }
}

TEST_CASE("atom at one violates H2") {
  ModelConfig cfg;
  cfg.fitness = Fitness::energy_exp(0.0);
  cfg.weights = WeightLaw::finite({{0.5, 0.5}, {1.0, 0.5}});
  CHECK(check_hypotheses(validate_config(cfg)).h2.verdict == Verdict::Fail);
}

TEST_CASE("ngf beta threshold values") {
  CHECK(ngf_beta_threshold(2) == doctest::Approx(std::log(1.5)).epsilon(1e-12));
  CHECK(ngf_beta_threshold(2) == doctest::Approx(0.405465).epsilon(1e-6));
  CHECK(ngf_beta_threshold(3) == doctest::Approx(0.143841).epsilon(1e-5));
  for (int d = 2; d < 10; ++d) CHECK(ngf_beta_threshold(d + 1) < ngf_beta_threshold(d));
  CHECK_THROWS_AS(ngf_beta_threshold(1), Error);
}

TEST_CASE("check_hypotheses is pure") {
  const auto cfg = energy_cfg(3, 0.1);
  CHECK(check_hypotheses(cfg) == check_hypotheses(cfg));
}

TEST_CASE("fitness range over the support") {
  const auto r = fitness_range(finite_cfg(2, Variant::A));
  CHECK(r.min == 0.25);
  CHECK(r.max == 1.0);
}
