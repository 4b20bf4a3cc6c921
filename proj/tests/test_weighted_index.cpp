#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "simplex/stats.hpp"
#include "simplex/weighted_index.hpp"

using namespace simplex;

TEST_CASE("insert and remove maintain the total") {
  DynamicWeightedIndex idx;
  idx.insert(1.0);
  CHECK(idx.total() == 1.0);

  DynamicWeightedIndex b;
  b.insert(0.2);
  b.insert(0.3);
  CHECK(b.total() == doctest::Approx(0.5));

  DynamicWeightedIndex c;
  const auto h = c.insert(0.2);
  c.remove(h);
  CHECK(c.total() == 0.0);
  CHECK(c.empty());
  CHECK_THROWS_AS(c.remove(h), Error);

  DynamicWeightedIndex d;
  d.insert(1.0);
  const auto two = d.insert(2.0);
  d.insert(3.0);
  CHECK(d.remove(two) == 2.0);
  CHECK(d.total() == 4.0);
  CHECK(d.size() == 2);
}

TEST_CASE("non-positive weights are rejected") {
  DynamicWeightedIndex idx;
  for (double w : {0.0, -1.0, double(NAN), double(INFINITY)}) {
    try {
      idx.insert(w);
      FAIL("expected NonPositiveWeight");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonPositiveWeight);
    }
  }
}

TEST_CASE("sampling an empty index throws") {
  DynamicWeightedIndex idx;
  Rng rng = make_rng(0, 0);
  CHECK_THROWS_AS(idx.sample(rng), Error);
  const auto h = idx.insert(1.0);
  idx.remove(h);
  CHECK_THROWS_AS(idx.sample(rng), Error);
}

TEST_CASE("single slot is always returned") {
  DynamicWeightedIndex idx;
  idx.insert(0.1);
  const auto h = idx.insert(5.0);
  idx.remove(0);
  Rng rng = make_rng(1, 0);
  for (int i = 0; i < 1000; ++i) REQUIRE(idx.sample(rng) == h);
}

TEST_CASE("equal weights give equal frequencies") {
  DynamicWeightedIndex idx;
  idx.insert(1.0);
  idx.insert(1.0);
  Rng rng = make_rng(2, 0);
  const int n = 1'000'000;
  int first = 0;
  for (int i = 0; i < n; ++i) first += idx.sample(rng) == 0;
  CHECK(std::abs(first / double(n) - 0.5) < 3 * std::sqrt(0.25 / n));
}

TEST_CASE("weights (1,3) pass a chi-square test") {
  DynamicWeightedIndex idx;
  idx.insert(1.0);
  idx.insert(3.0);
  Rng rng = make_rng(3, 0);
  std::vector<std::uint64_t> obs(2, 0);
  for (int i = 0; i < 1'000'000; ++i) ++obs[idx.sample(rng)];
  const std::vector<double> p{0.25, 0.75};
  CHECK(chi_square_test(obs, p).p_value > 0.001);
}

TEST_CASE("removed handles are never sampled") {
  DynamicWeightedIndex idx;
  std::vector<DynamicWeightedIndex::Handle> hs;
  for (int i = 0; i < 100; ++i) hs.push_back(idx.insert(1.0 + i % 5));
  std::set<DynamicWeightedIndex::Handle> dead;
  for (int i = 0; i < 100; i += 2) {
    idx.remove(hs[i]);
    dead.insert(hs[i]);
  }
  Rng rng = make_rng(4, 0);
  for (int i = 0; i < 100'000; ++i) REQUIRE(dead.count(idx.sample(rng)) == 0);
}

TEST_CASE("freed slots are reused") {
  DynamicWeightedIndex idx;
  idx.insert(1.0);
  const auto h = idx.insert(2.0);
  idx.remove(h);
  CHECK(idx.insert(3.0) == h);
  CHECK(idx.slot_count() == 2);
}

TEST_CASE("incremental total tracks a recount through 1e5 mutations") {
  DynamicWeightedIndex idx;
  Rng rng = make_rng(5, 0);
  std::vector<DynamicWeightedIndex::Handle> live;
  for (int i = 0; i < 100'000; ++i) {
    if (live.empty() || uniform01(rng) < 0.6) {
      live.push_back(idx.insert(1e-3 + 10.0 * uniform01(rng)));
    } else {
      const auto j = static_cast<std::size_t>(uniform01(rng) * live.size());
      idx.remove(live[j]);
      live[j] = live.back();
      live.pop_back();
    }
    if (i % 10'000 == 0) {
      const double exact = idx.recompute_total();
      REQUIRE(std::abs(idx.total() - exact) <= 1e-9 * exact);
    }
  }
  CHECK(idx.size() == live.size());
  const double exact = idx.recompute_total();
  CHECK(std::abs(idx.total() - exact) <= 1e-9 * exact);
}

TEST_CASE("chi-square on many slots after churn") {
  DynamicWeightedIndex idx;
  std::vector<DynamicWeightedIndex::Handle> hs;
  for (int i = 1; i <= 40; ++i) hs.push_back(idx.insert(0.5 * i));
  for (int i = 0; i < 40; i += 4) idx.remove(hs[i]);
  for (int i = 0; i < 5; ++i) idx.insert(7.0);
  std::vector<double> p(idx.slot_count(), 0.0);
  for (std::size_t h = 0; h < p.size(); ++h) {
    if (idx.live(static_cast<DynamicWeightedIndex::Handle>(h))) {
      p[h] = idx.weight(static_cast<DynamicWeightedIndex::Handle>(h)) / idx.total();
    }
  }
  std::vector<std::uint64_t> obs(p.size(), 0);
  Rng rng = make_rng(6, 0);
  for (int i = 0; i < 1'000'000; ++i) ++obs[idx.sample(rng)];
  CHECK(chi_square_test(obs, p).p_value > 0.001);
}

TEST_CASE("chi-square helper agrees with known quantiles") {
  // 95th percentile of chi-square(1) is 3.841459.
  CHECK(chi_square_sf(3.841459, 1) == doctest::Approx(0.05).epsilon(1e-5));
  CHECK(chi_square_sf(0.0, 3) == 1.0);
}
