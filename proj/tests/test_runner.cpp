#include <atomic>

#include "doctest.h"
#include "simplex/runner.hpp"

using namespace simplex;

namespace {

ModelConfig weighted() {
  ModelConfig cfg;
  cfg.d = 2;
  cfg.fitness = Fitness::product({ScalarMap::Kind::Identity, 0});
  cfg.weights = WeightLaw::finite({{0.5, 0.5}, {1.0, 0.5}});
  return validate_config(cfg);
}

}  // namespace

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("parallel_for rethrows") {
  CHECK_THROWS_AS(parallel_for(100, 3,
                               [](std::size_t i) {
                                 if (i == 50) throw Error(ErrorCode::InvalidArgument, "boom");
                               }),
                  Error);
}

TEST_CASE("growth runs are reproducible and thread independent") {
  GrowthRunOptions o;
  o.steps = 5000;
  o.replicas = 5;
  o.seed = 17;
  o.threads = 1;
  const auto a = run_growth(weighted(), o);
  o.threads = 3;
  const auto b = run_growth(weighted(), o);
  CHECK(fingerprint(a.replica_counts) == fingerprint(b.replica_counts));
  CHECK(a.profile == b.profile);
  o.seed = 18;
  const auto c = run_growth(weighted(), o);
  CHECK(fingerprint(a.replica_counts) != fingerprint(c.replica_counts));
}

TEST_CASE("replica standard errors shrink the spread") {
  GrowthRunOptions o;
  o.steps = 2000;
  o.replicas = 20;
  const auto r = run_growth(weighted(), o);
  CHECK(r.profile.replicas == 20);
  CHECK(r.profile.std_error(0) > 0.0);
  CHECK(r.profile.std_error(0) < 0.05);
}

TEST_CASE("audited runs pass") {
  GrowthRunOptions o;
  o.steps = 3000;
  o.audit = true;
  CHECK_NOTHROW(run_growth(weighted(), o));
}

TEST_CASE("traces come from replica 0") {
  GrowthRunOptions o;
  o.steps = 1000;
  o.replicas = 3;
  o.trace.z_stride = 10;
  const auto r = run_growth(weighted(), o);
  CHECK(r.z_trace.size() == 100);
  CHECK(r.replica_counts.size() == 3);
}
