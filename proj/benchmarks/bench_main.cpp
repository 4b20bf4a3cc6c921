#include <benchmark/benchmark.h>

#include "simplex/complex.hpp"
#include "simplex/star.hpp"
#include "simplex/urn.hpp"
#include "simplex/weighted_index.hpp"

using namespace simplex;

namespace {

ModelConfig weighted(int d, Variant v) {
  ModelConfig cfg;
  cfg.d = d;
  cfg.variant = v;
  cfg.fitness = Fitness::product({ScalarMap::Kind::Identity, 0});
  cfg.weights = WeightLaw::finite({{0.5, 0.5}, {1.0, 0.5}});
  return validate_config(cfg);
}

void BM_IndexSampleReplace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  DynamicWeightedIndex index(n);
  auto rng = make_rng(1, 0);
  for (std::size_t i = 0; i < n; ++i) index.insert(1.0 + uniform01(rng));
  for (auto _ : state) {
    const auto h = index.sample(rng);
    index.remove(h);
    benchmark::DoNotOptimize(index.insert(1.0 + uniform01(rng)));
  }
}
BENCHMARK(BM_IndexSampleReplace)->Range(1 << 10, 1 << 22);

void BM_GrowthStep(benchmark::State& state) {
  const auto cfg = weighted(static_cast<int>(state.range(0)),
                            state.range(1) == 0 ? Variant::A : Variant::B);
  auto rng = make_rng(2, 0);
  auto complex = ComplexState::init(cfg, rng);
  for (auto _ : state) complex.advance(rng);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GrowthStep)->Args({1, 0})->Args({2, 0})->Args({3, 0})->Args({3, 1})->Args({5, 0});

void BM_StarStep(benchmark::State& state) {
  const auto cfg = weighted(static_cast<int>(state.range(0)), Variant::A);
  const auto seeds = solve_urn(cfg).type_law();
  auto rng = make_rng(3, 0);
  auto star = StarState::init(cfg, seeds, std::nullopt, rng);
  for (auto _ : state) star.step(rng);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StarStep)->Arg(2)->Arg(3);

void BM_UrnSolve(benchmark::State& state) {
  ModelConfig cfg = weighted(static_cast<int>(state.range(0)), Variant::A);
  cfg.weights = WeightLaw::finite({{0.2, 0.25}, {0.4, 0.25}, {0.7, 0.25}, {1.0, 0.25}});
  for (auto _ : state) benchmark::DoNotOptimize(solve_urn(cfg).lambda);
}
BENCHMARK(BM_UrnSolve)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
