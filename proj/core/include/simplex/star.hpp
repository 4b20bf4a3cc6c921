#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplex/model_config.hpp"
#include "simplex/profile.hpp"
#include "simplex/rng.hpp"
#include "simplex/type_distribution.hpp"
#include "simplex/weighted_index.hpp"

namespace simplex {

/// Companion star process: the star of one centre vertex evolved in
/// isolation.
///
/// The state is the centre weight x and a multiset of co-types y (length
/// d - 1, the face minus its centre); the face fitness is f(x u y). Each step
/// picks y proportionally to fitness, draws W ~ mu and adds y_{i<-W} for
/// every coordinate i of y; Model B also drops y. For d = 1 there is a single
/// empty co-type and F = f(x) forever.
class StarState {
 public:
  /// Draws a face type from `seed_types`, subdivides it by a centre of weight
  /// `center` (or W ~ mu when absent) and keeps the d faces containing the
  /// centre. Throws DimensionUnsupported for Model B with d = 1.
  static StarState init(const ModelConfig& cfg, const TypeDistribution& seed_types,
                        std::optional<double> center, Rng& rng);

  /// Throws EmptyStar when no co-type is left.
  void step(Rng& rng);

  double center() const noexcept { return center_; }
  std::uint64_t steps() const noexcept { return n_; }
  std::size_t size() const noexcept { return index_.size(); }
  /// F(S), incremental.
  double fitness_total() const noexcept { return index_.total(); }
  double recompute_fitness_total() const;
  /// Sorted co-types currently in the star.
  std::vector<FaceType> cotypes() const;

 private:
  StarState() = default;
  void insert(std::span<const double> cotype);

  ModelConfig cfg_;
  double center_ = 0.0;
  std::size_t width_ = 0;  // d - 1
  DynamicWeightedIndex index_;
  std::vector<double> arena_;  // width_ weights per slot
  std::uint64_t n_ = 0;
};

/// Expected |S*_n| = d + (d-1) n (Model A) or d + (d-2) n (Model B).
std::uint64_t expected_star_size(const ModelConfig& cfg, std::uint64_t n);

struct StarRunOptions {
  std::uint64_t replicas = 100'000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Monte Carlo p_k = E[ lambda/(F_k+lambda) prod_{j<k} F_j/(F_j+lambda) ] for
/// k = 0..k_max, one star chain of k_max steps per replica. Deterministic in
/// (cfg, lambda, seed_types, options.seed) regardless of thread count.
DegreeProfile estimate_pk(const ModelConfig& cfg, double lambda, int k_max,
                          const TypeDistribution& seed_types, const StarRunOptions& options);

struct LambdaStarEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::vector<std::string> warnings;
};

/// Mean over replicas of the last-half average of F(S*_n)/n with the centre
/// weight fixed to w. Requires steps >= 10^4.
LambdaStarEstimate estimate_lambda_star(const ModelConfig& cfg, double w, std::uint64_t steps,
                                        const TypeDistribution& seed_types,
                                        const StarRunOptions& options);

}  // namespace simplex
