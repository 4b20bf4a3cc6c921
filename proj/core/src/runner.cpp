#include "simplex/runner.hpp"

namespace simplex {

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::uint64_t fingerprint(const std::vector<std::vector<std::uint64_t>>& counts) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& row : counts) {
    mix(row.size());
    for (auto c : row) mix(c);
  }
  return h;
}

GrowthRunResult run_growth(const ModelConfig& cfg, const GrowthRunOptions& options) {
  if (options.replicas == 0) throw Error(ErrorCode::InvalidArgument, "replicas must be >= 1");
  GrowthRunResult out;
  out.replica_counts.resize(options.replicas);
  parallel_for(options.replicas, options.threads, [&](std::size_t r) {
    Rng rng = make_rng(options.seed, r);
    auto state = ComplexState::init(cfg, rng, options.audit);
    const TraceOptions trace = r == 0 ? options.trace : TraceOptions{};
    auto summary = grow(state, options.steps, trace, rng);
    if (options.audit) {
      const auto rep = state.audit();
      if (!rep.ok()) throw Error(ErrorCode::InvalidArgument, "audit failed: " + rep.failures.front());
    }
    out.replica_counts[r] = state.degree_counts();
    if (r == 0) {
      out.z_trace = std::move(summary.z_trace);
      out.y_samples = std::move(summary.y_samples);
    }
  });
  out.profile = aggregate_growth_counts(out.replica_counts, cfg.d, options.steps);
  return out;
}

}  // namespace simplex
