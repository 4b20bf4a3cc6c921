#include <cmath>

#include "doctest.h"
#include "simplex/closed_form.hpp"

using namespace simplex;

TEST_CASE("d=1 recursive tree: degree m has share 2^-m") {
  // Excess k = m - 1, so the degree-3 share 1/8 sits at k = 2.
  CHECK(pk_model_a_const(1, 2) == 0.125);
  for (int k = 0; k < 60; ++k) CHECK(pk_model_a_const(1, k + 1) == pk_model_a_const(1, k) / 2);
}

TEST_CASE("Model A d=2 first values and simplified form") {
  CHECK(pk_model_a_const(2, 0) == doctest::Approx(0.5));
  CHECK(pk_model_a_const(2, 1) == doctest::Approx(0.2));
  CHECK(pk_model_a_const(2, 2) == doctest::Approx(0.1));
  // The product telescopes to 12/((k+2)(k+3)(k+4)).
  for (int k : {0, 5, 64, 65, 1000, 100'000}) {
    const double kk = k;
    CHECK(pk_model_a_const(2, k) ==
          doctest::Approx(12.0 / ((kk + 2) * (kk + 3) * (kk + 4))).epsilon(1e-9));
  }
}

TEST_CASE("Model B d=3 first values and simplified form") {
  CHECK(pk_model_b_const(3, 0) == doctest::Approx(0.4));
  CHECK(pk_model_b_const(3, 1) == doctest::Approx(0.2));
  CHECK(pk_model_b_const(3, 2) == doctest::Approx(4.0 / 35));
  for (int k : {0, 7, 64, 65, 5000, 100'000}) {
    const double kk = k;
    CHECK(pk_model_b_const(3, k) ==
          doctest::Approx(24.0 / ((kk + 3) * (kk + 4) * (kk + 5))).epsilon(1e-9));
  }
}

TEST_CASE("Model B d=2 normalized and printed forms") {
  double s = 0.0;
  double printed = 0.0;
  for (int k = 0; k <= 1000; ++k) {
    s += pk_model_b_const(2, k);
    printed += pk_model_b_const(2, k, true);
  }
  CHECK(std::abs(s - 1.0) <= 1e-12);
  CHECK(printed == doctest::Approx(1.5));
  CHECK(pk_model_b_const(2, 0, true) == 0.5);
  CHECK_THROWS_AS(pk_model_b_const(1, 0), Error);
}

TEST_CASE("product and gamma forms agree to 1e-9 for k <= 1000") {
  for (int d = 2; d <= 6; ++d) {
    for (int k = 0; k <= 1000; k += 7) {
      CHECK(pk_model_a_gamma(d, k) == doctest::Approx(pk_model_a_product(d, k)).epsilon(1e-9));
      if (d >= 3) {
        CHECK(pk_model_b_gamma(d, k) == doctest::Approx(pk_model_b_product(d, k)).epsilon(1e-9));
      }
    }
  }
  CHECK_THROWS_AS(pk_model_a_gamma(1, 3), Error);
  CHECK_THROWS_AS(pk_model_b_gamma(2, 3), Error);
}

TEST_CASE("gamma form at k=1e4 agrees with the product and has slope -(2d-1)/(d-1)") {
  CHECK(pk_model_a_gamma(2, 10'000) == doctest::Approx(pk_model_a_product(2, 10'000)).epsilon(1e-6));
  for (int d = 2; d <= 5; ++d) {
    const double k1 = 1e5;
    const double k2 = 2e5;
    const double slope = std::log(pk_model_a_const(d, int(k2)) / pk_model_a_const(d, int(k1))) /
                         std::log(k2 / k1);
    CHECK(slope == doctest::Approx(-(2.0 * d - 1) / (d - 1)).epsilon(1e-3));
  }
}

namespace {

struct Partial {
  double mass = 0.0;
  double mean = 0.0;
};

Partial partial_sums(Variant v, int d, int K) {
  Partial s;
  for (int k = 0; k <= K; ++k) {
    const double p = pk_const(v, d, k);
    REQUIRE(p >= 0.0);
    s.mass += p;
    s.mean += k * p;
  }
  return s;
}

}  // namespace

TEST_CASE("constant-fitness laws sum to one with mean excess d") {
  // Light tails: both partial sums are within 1e-3 at K = 1e5.
  for (auto [v, d] : {std::pair{Variant::A, 1}, {Variant::A, 2}, {Variant::B, 2}, {Variant::B, 3}}) {
    const auto s = partial_sums(v, d, 100'000);
    CHECK(s.mass <= 1.0 + 1e-12);
    CHECK(s.mass == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(s.mean <= d + 1e-9);
    CHECK(s.mean == doctest::Approx(d).epsilon(1e-3));
  }
}

TEST_CASE("heavy tails: the mean deficit decays like K^(2 - alpha)") {
  // p_k ~ k^-alpha, so d - sum_{k<=K} k p_k ~ C K^(2 - alpha).
  for (auto [v, d] : {std::pair{Variant::A, 3}, {Variant::A, 5}, {Variant::B, 4}, {Variant::B, 6}}) {
    const double alpha = v == Variant::A ? (2.0 * d - 1) / (d - 1) : (2.0 * d - 3) / (d - 2);
    const auto s1 = partial_sums(v, d, 10'000);
    const auto s2 = partial_sums(v, d, 100'000);
    CHECK(s2.mass == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(s1.mean < s2.mean);
    CHECK(s2.mean < d);
    const double rate = std::log10((d - s1.mean) / (d - s2.mean));
    CHECK(rate == doctest::Approx(alpha - 2.0).epsilon(0.02));
  }
}

TEST_CASE("closed-form profile matches pointwise values") {
  const auto p = closed_form_profile(Variant::B, 3, 100);
  CHECK(p.provenance == Provenance::ClosedForm);
  CHECK(p.entries.size() == 101);
  CHECK(p.fraction(70) == pk_model_b_const(3, 70));
}

TEST_CASE("weighted recursive tree") {
  const auto delta = WeightLaw::finite({{1.0, 1.0}});
  const auto id = [](double w) { return w; };
  for (int k = 0; k < 10; ++k) CHECK(pk_wrt(delta, id, k) == doctest::Approx(std::ldexp(1.0, -(k + 1))));

  auto two = WeightLaw::finite({{0.5, 0.5}, {1.0, 0.5}});
  two.normalize();
  CHECK(lambda_wrt(two, id) == doctest::Approx(0.75));
  CHECK(pk_wrt(two, id, 0) == doctest::Approx(18.0 / 35).epsilon(1e-14));
  double mass = 0.0;
  for (int k = 0; k <= 200; ++k) mass += pk_wrt(two, id, k);
  CHECK(mass >= 1.0 - 1e-6);

  const auto zero = WeightLaw::finite({{0.0, 1.0}});
  CHECK_THROWS_AS(pk_wrt(zero, id, 0), Error);
}

TEST_CASE("weighted tree profile needs d=1 Model A") {
  ModelConfig cfg;
  cfg.d = 1;
  cfg.fitness = Fitness::product({ScalarMap::Kind::Identity, 0});
  cfg.weights = WeightLaw::finite({{0.5, 0.5}, {1.0, 0.5}});
  cfg = validate_config(cfg);
  const auto p = wrt_profile(cfg, 5);
  CHECK(p.fraction(0) == doctest::Approx(18.0 / 35));
  cfg.d = 2;
  CHECK_THROWS_AS(wrt_profile(cfg, 5), Error);
}

TEST_CASE("gamma ratio") {
  CHECK(gamma_ratio_asymptotic(10, 1) == doctest::Approx(10.0).epsilon(1e-13));
  CHECK(gamma_ratio_asymptotic(3.5, 0) == 1.0);
  CHECK(gamma_ratio_asymptotic(1e6, 2.5) / std::pow(1e6, 2.5) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK_THROWS_AS(gamma_ratio_asymptotic(0.0, 1), Error);
  CHECK_THROWS_AS(gamma_ratio_asymptotic(-2.0, 1), Error);
}

TEST_CASE("tail exponent bounds") {
  ModelConfig b3;
  b3.d = 3;
  b3.variant = Variant::B;
  b3.fitness = Fitness::constant(1.7);
  b3 = validate_config(b3);
  auto tb = tail_exponent_bounds(b3, 2 * 1.7);
  CHECK(tb.lower == doctest::Approx(-3.0));
  CHECK(tb.upper == doctest::Approx(-3.0));

  ModelConfig a2;
  a2.d = 2;
  a2 = validate_config(a2);
  tb = tail_exponent_bounds(a2, 2.0);
  CHECK(tb.lower == doctest::Approx(-3.0));
  CHECK(tb.upper == doctest::Approx(-3.0));
  CHECK_FALSE(tb.above_minus_two);
  tb = tail_exponent_bounds(a2, 2.0, 4.0);
  CHECK(tb.lower == doctest::Approx(-1.5));
  CHECK(tb.above_minus_two);

  ModelConfig b2;
  b2.d = 2;
  b2.variant = Variant::B;
  b2 = validate_config(b2);
  CHECK_THROWS_AS(tail_exponent_bounds(b2, 1.0), Error);
  ModelConfig a1;
  a1.d = 1;
  a1 = validate_config(a1);
  CHECK_THROWS_AS(tail_exponent_bounds(a1, 1.0), Error);
}

TEST_CASE("weighted bounds bracket each other") {
  ModelConfig cfg;
  cfg.d = 3;
  cfg.fitness = Fitness::product({ScalarMap::Kind::Identity, 0});
  cfg.weights = WeightLaw::finite({{0.5, 0.5}, {1.0, 0.5}});
  cfg = validate_config(cfg);
  const auto tb = tail_exponent_bounds(cfg, 1.0);
  CHECK(tb.f_min == 0.125);
  CHECK(tb.f_max == 1.0);
  CHECK(tb.lower <= tb.upper);
}
