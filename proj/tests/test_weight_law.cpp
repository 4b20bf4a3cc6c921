#include <cmath>

#include "doctest.h"
#include "simplex/weight_law.hpp"

using namespace simplex;

TEST_CASE("finite law normalizes and sorts atoms") {
  auto mu = WeightLaw::finite({{1.0, 0.5}, {0.5, 0.5}});
  CHECK(mu.issues().empty());
  mu.normalize();
  REQUIRE(mu.atoms().size() == 2);
  CHECK(mu.atoms()[0].value == 0.5);
  CHECK(mu.mean() == doctest::Approx(0.75));
  CHECK(mu.atom_mass(1.0) == 0.5);
  CHECK(mu.atom_mass(0.7) == 0.0);
  CHECK(mu.support_min() == 0.5);
  CHECK(mu.support_max() == 1.0);
  CHECK(mu.in_support(0.5));
  CHECK_FALSE(mu.in_support(0.75));
}

TEST_CASE("probabilities that do not sum to one are rejected") {
  const auto issues = WeightLaw::finite({{0.2, 0.5}, {0.8, 0.6}}).issues();
  REQUIRE_FALSE(issues.empty());
  CHECK(issues.front().code == ErrorCode::BadDistribution);
}

TEST_CASE("invalid atoms each produce an issue") {
  const auto issues = WeightLaw::finite({{1.5, 0.5}, {0.2, 0.0}, {0.2, 0.5}}).issues();
  CHECK(issues.size() >= 3);
  CHECK(!WeightLaw::finite({}).issues().empty());
}

TEST_CASE("table cdf must be strictly increasing and end at one") {
  CHECK(WeightLaw::table_cdf({{0.0, 0.0}, {0.5, 0.7}, {1.0, 1.0}}).issues().empty());
  CHECK(!WeightLaw::table_cdf({{0.0, 0.0}, {0.5, 0.5}, {0.4, 1.0}}).issues().empty());
  CHECK(!WeightLaw::table_cdf({{0.0, 0.0}, {1.0, 0.9}}).issues().empty());
  CHECK(!WeightLaw::table_cdf({{0.0, 0.0}}).issues().empty());
}

TEST_CASE("table cdf quantile interpolates linearly") {
  const auto mu = WeightLaw::table_cdf({{0.0, 0.0}, {0.5, 0.8}, {1.0, 1.0}});
  CHECK(mu.quantile(0.4) == doctest::Approx(0.25));
  CHECK(mu.quantile(0.9) == doctest::Approx(0.75));
  // Mean of the piecewise-uniform law: 0.8*0.25 + 0.2*0.75.
  CHECK(mu.mean() == doctest::Approx(0.35).epsilon(1e-9));
}

TEST_CASE("table cdf with positive first mass has an atom at the first value") {
  const auto mu = WeightLaw::table_cdf({{0.2, 0.3}, {1.0, 1.0}});
  CHECK(mu.quantile(0.1) == 0.2);
  CHECK(mu.atom_mass(0.2) == doctest::Approx(0.3));
}

TEST_CASE("uniform law moments and expectation quadrature") {
  const auto mu = WeightLaw::uniform01();
  CHECK(mu.mean() == 0.5);
  CHECK(mu.variance() == doctest::Approx(1.0 / 12));
  CHECK(mu.expect([](double x) { return x * x; }) == doctest::Approx(1.0 / 3).epsilon(1e-10));
}

TEST_CASE("samples stay in [0,1] with mean within 3 sigma") {
  const WeightLaw laws[] = {
      WeightLaw::uniform01(),
      WeightLaw::finite({{0.1, 0.25}, {0.6, 0.25}, {0.9, 0.5}}),
      WeightLaw::table_cdf({{0.0, 0.0}, {0.3, 0.6}, {1.0, 1.0}}),
  };
  for (auto mu : laws) {
    mu.normalize();
    Rng rng = make_rng(42, 0);
    const int n = 100'000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = mu.sample(rng);
      REQUIRE(x >= 0.0);
      REQUIRE(x <= 1.0);
      sum += x;
    }
    const double sigma = std::sqrt(mu.variance() / n);
    CHECK(std::abs(sum / n - mu.mean()) < 3 * sigma);
  }
}

TEST_CASE("finite sampling matches atom probabilities") {
  auto mu = WeightLaw::finite({{0.5, 0.25}, {1.0, 0.75}});
  mu.normalize();
  Rng rng = make_rng(1, 2);
  int high = 0;
  const int n = 200'000;
  for (int i = 0; i < n; ++i) high += mu.sample(rng) == 1.0;
  CHECK(std::abs(high / double(n) - 0.75) < 4 * std::sqrt(0.75 * 0.25 / n));
}

TEST_CASE("kind names") {
  CHECK(to_string(WeightLaw::Kind::FiniteSupport) == "finite");
  CHECK(to_string(WeightLaw::Kind::TableCdf) == "table-cdf");
}
