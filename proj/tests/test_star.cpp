#include <cmath>

#include "doctest.h"
#include "simplex/closed_form.hpp"
#include "simplex/star.hpp"

using namespace simplex;

namespace {

ModelConfig make(int d, Variant v, Fitness f = Fitness::constant(1.0)) {
  ModelConfig cfg;
  cfg.d = d;
  cfg.variant = v;
  cfg.fitness = f;
  return validate_config(cfg);
}

ModelConfig weighted(int d, Variant v) {
  ModelConfig cfg;
  cfg.d = d;
  cfg.variant = v;
  cfg.fitness = Fitness::product({ScalarMap::Kind::Identity, 0});
  cfg.weights = WeightLaw::finite({{0.5, 0.5}, {1.0, 0.5}});
  return validate_config(cfg);
}

}  // namespace

TEST_CASE("initial star keeps the d faces through the centre") {
  Rng rng = make_rng(0, 0);
  auto cfg = weighted(2, Variant::A);
  auto s = StarState::init(cfg, TypeDistribution::point_mass(FaceType{0.5, 1.0}), 1.0, rng);
  CHECK(s.size() == 2);
  CHECK(s.cotypes() == std::vector<FaceType>{FaceType{0.5}, FaceType{1.0}});
  CHECK(s.fitness_total() == doctest::Approx(1.0 * 0.5 + 1.0 * 1.0));

  auto cfg3 = weighted(3, Variant::A);
  auto s3 = StarState::init(cfg3, TypeDistribution::point_mass(FaceType{0.5, 0.5, 1.0}), 0.5, rng);
  CHECK(s3.cotypes() ==
        std::vector<FaceType>{FaceType{0.5, 0.5}, FaceType{0.5, 1.0}, FaceType{0.5, 1.0}});
}

TEST_CASE("d=1 star is frozen at f(w)") {
  Rng rng = make_rng(1, 0);
  auto cfg = weighted(1, Variant::A);
  auto s = StarState::init(cfg, TypeDistribution::point_mass(FaceType{0.5}), 0.5, rng);
  for (int i = 0; i < 100; ++i) {
    REQUIRE(s.fitness_total() == 0.5);
    s.step(rng);
  }
  CHECK(s.size() == 1);
}

TEST_CASE("Model B with d=1 has no star") {
  ModelConfig cfg;  // bypass validation on purpose
  cfg.d = 1;
  cfg.variant = Variant::B;
  Rng rng = make_rng(2, 0);
  CHECK_THROWS_AS(StarState::init(cfg, TypeDistribution::point_mass(FaceType{0.5}), 0.5, rng),
                  Error);
}

TEST_CASE("star size and incremental fitness after every step") {
  for (auto [v, d] : {std::pair{Variant::A, 2}, {Variant::A, 3}, {Variant::B, 3}, {Variant::B, 4}}) {
    auto cfg = weighted(d, v);
    Rng rng = make_rng(3, static_cast<std::uint64_t>(d));
    auto s = StarState::init(cfg, TypeDistribution::point_mass(FaceType(std::vector<double>(d, 1.0))),
                             std::nullopt, rng);
    const auto range_lo = 0.25 * std::pow(0.5, d - 2);  // f_min over [1/2,1]^d
    for (std::uint64_t n = 0; n <= 3000; ++n) {
      REQUIRE(s.size() == expected_star_size(cfg, n));
      REQUIRE(s.fitness_total() >= s.size() * range_lo * 0.999);
      REQUIRE(s.fitness_total() <= s.size() * 1.0 + 1e-9);
      if (n % 500 == 0) {
        const double exact = s.recompute_fitness_total();
        REQUIRE(std::abs(exact - s.fitness_total()) <= 1e-9 * exact);
      }
      s.step(rng);
    }
  }
}

TEST_CASE("Model B d=2 star keeps two co-types") {
  auto cfg = make(2, Variant::B);
  Rng rng = make_rng(4, 0);
  auto s = StarState::init(cfg, TypeDistribution::point_mass(FaceType{0.2, 0.4}), std::nullopt, rng);
  for (int i = 0; i < 100; ++i) s.step(rng);
  CHECK(s.size() == 2);
}

TEST_CASE("constant-fitness star reproduces the closed forms to 1e-12") {
  struct Case {
    Variant v;
    int d;
  };
  for (auto c : {Case{Variant::A, 1}, Case{Variant::A, 2}, Case{Variant::A, 3}, Case{Variant::B, 2},
                 Case{Variant::B, 3}, Case{Variant::B, 5}}) {
    const double f0 = 0.7;
    auto cfg = make(c.d, c.v, Fitness::constant(f0));
    const double lambda = (c.v == Variant::A ? c.d : c.d - 1) * f0;
    StarRunOptions o;
    o.replicas = 200;
    const auto seed = TypeDistribution::point_mass(FaceType(std::vector<double>(c.d, 0.5)));
    const auto p = estimate_pk(cfg, lambda, 30, seed, o);
    for (int k = 0; k <= 30; ++k) {
      INFO("v=", to_string(c.v), " d=", c.d, " k=", k);
      const double expect = pk_const(c.v, c.d, k);
      REQUIRE(std::abs(p.fraction(k) - expect) <= 1e-12 * expect);
      REQUIRE(p.std_error(k) <= 1e-12 * expect);
    }
  }
}

TEST_CASE("p_0..p_2 for constant Model A d=2 and Model B d=3") {
  StarRunOptions o;
  o.replicas = 10;
  const auto a = estimate_pk(make(2, Variant::A), 2.0, 2,
                             TypeDistribution::point_mass(FaceType{0.5, 0.5}), o);
  CHECK(a.fraction(0) == doctest::Approx(0.5));
  CHECK(a.fraction(1) == doctest::Approx(0.2));
  CHECK(a.fraction(2) == doctest::Approx(0.1));
  const auto b = estimate_pk(make(3, Variant::B), 2.0, 2,
                             TypeDistribution::point_mass(FaceType{0.5, 0.5, 0.5}), o);
  CHECK(b.fraction(0) == doctest::Approx(0.4));
  CHECK(b.fraction(1) == doctest::Approx(0.2));
  CHECK(b.fraction(2) == doctest::Approx(4.0 / 35));
}

TEST_CASE("weighted recursive tree p_0 = 18/35 by Monte Carlo") {
  auto cfg = weighted(1, Variant::A);
  StarRunOptions o;
  o.replicas = 100'000;
  o.seed = 5;
  const auto law = TypeDistribution({FaceType{0.5}, FaceType{1.0}}, {1.0 / 3, 2.0 / 3});
  const auto p = estimate_pk(cfg, 0.75, 8, law, o);
  CHECK(std::abs(p.fraction(0) - 18.0 / 35) < 4 * p.std_error(0) + 1e-12);
  for (int k = 0; k <= 8; ++k) {
    const double exact = pk_wrt(cfg.weights, [](double w) { return w; }, k);
    CHECK(std::abs(p.fraction(k) - exact) < 5 * p.std_error(k) + 1e-12);
  }
}

TEST_CASE("estimate_pk properties: nonnegative, bounded sum, thread independent") {
  auto cfg = weighted(2, Variant::A);
  const auto law = TypeDistribution({FaceType{0.5, 0.5}, FaceType{0.5, 1.0}, FaceType{1.0, 1.0}},
                                    {0.2, 0.4, 0.4});
  StarRunOptions o;
  o.replicas = 5000;
  o.seed = 6;
  const auto p1 = estimate_pk(cfg, 1.3, 12, law, o);
  o.threads = 3;
  const auto p3 = estimate_pk(cfg, 1.3, 12, law, o);
  CHECK(p1 == p3);
  double sum = 0.0;
  double se = 0.0;
  for (const auto& e : p1.entries) {
    CHECK(e.fraction >= 0.0);
    sum += e.fraction;
    se += e.std_error;
  }
  CHECK(sum <= 1.0 + 3 * se);
  const auto shorter = estimate_pk(cfg, 1.3, 6, law, o);
  CHECK(shorter.total_fraction() <= p1.total_fraction());
}

TEST_CASE("estimate_pk rejects bad lambda") {
  StarRunOptions o;
  o.replicas = 1;
  const auto law = TypeDistribution::point_mass(FaceType{0.5, 0.5});
  CHECK_THROWS_AS(estimate_pk(make(2, Variant::A), 0.0, 3, law, o), Error);
}

TEST_CASE("lambda* for constant fitness is (d-1) f0 (A) and (d-2) f0 (B)") {
  StarRunOptions o;
  o.replicas = 4;
  const double f0 = 1.5;
  const auto a = estimate_lambda_star(make(3, Variant::A, Fitness::constant(f0)), 0.5, 10'000,
                                      TypeDistribution::point_mass(FaceType{0.5, 0.5, 0.5}), o);
  CHECK(a.value == doctest::Approx(2 * f0).epsilon(1e-3));
  const auto b = estimate_lambda_star(make(4, Variant::B, Fitness::constant(f0)), 0.5, 10'000,
                                      TypeDistribution::point_mass(FaceType{0.5, 0.5, 0.5, 0.5}),
                                      o);
  CHECK(b.value == doctest::Approx(2 * f0).epsilon(1e-3));
}

TEST_CASE("lambda* lies within the fitness bounds") {
  auto cfg = weighted(2, Variant::A);
  StarRunOptions o;
  o.replicas = 8;
  const auto law = TypeDistribution::point_mass(FaceType{0.5, 1.0});
  for (double w : {0.5, 1.0}) {
    const auto est = estimate_lambda_star(cfg, w, 10'000, law, o);
    CHECK(est.value >= 0.25);
    CHECK(est.value <= 1.0);
  }
  CHECK_THROWS_AS(estimate_lambda_star(cfg, 0.5, 9'999, law, o), Error);
  CHECK_THROWS_AS(estimate_lambda_star(cfg, 0.7, 10'000, law, o), Error);
}

TEST_CASE("lambda* warns when H1* and H2* fail") {
  StarRunOptions o;
  o.replicas = 2;
  auto cfg = weighted(2, Variant::B);
  const auto est = estimate_lambda_star(cfg, 0.5, 10'000,
                                        TypeDistribution::point_mass(FaceType{0.5, 1.0}), o);
  CHECK_FALSE(est.warnings.empty());
}
