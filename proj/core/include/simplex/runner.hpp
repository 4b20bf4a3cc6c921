#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "simplex/complex.hpp"
#include "simplex/model_config.hpp"

namespace simplex {

/// std::thread::hardware_concurrency(), at least 1.
unsigned default_threads();

/// Calls fn(i) for i in [0, count) on up to `threads` workers. Work is handed
/// out through an atomic counter; callers write results into slot i so the
/// outcome does not depend on scheduling. The first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(count);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct GrowthRunOptions {
  std::uint64_t steps = 0;
  std::uint64_t replicas = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  TraceOptions trace;  // applied to replica 0 only
  bool audit = false;
};

struct GrowthRunResult {
  DegreeProfile profile;
  std::vector<ZPoint> z_trace;
  std::vector<FaceType> y_samples;
  std::vector<std::vector<std::uint64_t>> replica_counts;
};

/// FNV-1a over per-replica degree counts, for reproducibility checks.
std::uint64_t fingerprint(const std::vector<std::vector<std::uint64_t>>& counts);

/// Independent growth replicas; replica r draws from make_rng(seed, r).
GrowthRunResult run_growth(const ModelConfig& cfg, const GrowthRunOptions& options);

}  // namespace simplex
