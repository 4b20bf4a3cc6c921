#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "simplex/face_type.hpp"
#include "simplex/fitness.hpp"
#include "simplex/rng.hpp"

using namespace simplex;

TEST_CASE("face type operations re-sort") {
  const FaceType x{0.7, 0.1, 0.4};
  CHECK(x.weights()[0] == 0.1);
  CHECK(x.replaced(0, 0.9) == FaceType{0.4, 0.7, 0.9});
  CHECK(x.dropped(1) == FaceType{0.1, 0.7});
  CHECK(x.merged(0.2) == FaceType{0.1, 0.2, 0.4, 0.7});
  CHECK(FaceType{0.1, 0.2} < FaceType{0.1, 0.3});
}

TEST_CASE("fitness kinds evaluate as defined") {
  const std::vector<double> x{0.5, 1.0};
  CHECK(Fitness::constant(2.5)(x) == 2.5);
  CHECK(Fitness::product({ScalarMap::Kind::Identity, 0})(x) == 0.5);
  CHECK(Fitness::product({ScalarMap::Kind::Shifted, 1.0})(x) == doctest::Approx(3.0));
  CHECK(Fitness::product({ScalarMap::Kind::Exp, 2.0})(x) == doctest::Approx(std::exp(3.0)));
  CHECK(Fitness::product({ScalarMap::Kind::Power, 2.0})(x) == doctest::Approx(0.25));
  CHECK(Fitness::energy_exp(1.0)(x) == doctest::Approx(std::exp(-0.5)));
  const auto t = Fitness::table({{FaceType{0.5, 1.0}, 4.0}});
  CHECK(t(std::vector<double>{1.0, 0.5}) == 4.0);
  CHECK_THROWS_AS(t(std::vector<double>{0.5, 0.5}), Error);
}

TEST_CASE("every fitness kind is exactly permutation symmetric") {
  const Fitness kinds[] = {Fitness::constant(1.3), Fitness::product({ScalarMap::Kind::Identity, 0}),
                           Fitness::product({ScalarMap::Kind::Exp, 0.7}),
                           Fitness::product({ScalarMap::Kind::Shifted, 0.1}),
                           Fitness::energy_exp(2.0)};
  Rng rng = make_rng(3, 0);
  for (const auto& f : kinds) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> x(4);
      for (auto& v : x) v = uniform01(rng);
      const double ref = f(x);
      std::sort(x.begin(), x.end());
      do {
        REQUIRE(f(x) == ref);
      } while (std::next_permutation(x.begin(), x.end()));
    }
  }
}

TEST_CASE("monotonicity classification") {
  CHECK(Fitness::product({ScalarMap::Kind::Identity, 0}).monotonicity() == Monotonicity::Increasing);
  CHECK(Fitness::product({ScalarMap::Kind::Exp, -1}).monotonicity() ==
        Monotonicity::NotIncreasing);
  CHECK(Fitness::energy_exp(0.5).monotonicity() == Monotonicity::Increasing);
  CHECK(Fitness::table({}).monotonicity() == Monotonicity::Unknown);
  CHECK_FALSE(Fitness::table({}).continuous());
}

TEST_CASE("scalar map names round trip") {
  for (auto k : {ScalarMap::Kind::Identity, ScalarMap::Kind::Shifted, ScalarMap::Kind::Exp,
                 ScalarMap::Kind::Power}) {
    CHECK(parse_scalar_map_kind(ScalarMap{k, 0}.name()) == k);
  }
  CHECK_THROWS_AS(parse_scalar_map_kind("log"), Error);
}
