#pragma once

#include <span>
#include <vector>

#include "simplex/face_type.hpp"
#include "simplex/rng.hpp"

namespace simplex {

/// Discrete law over face types. Seeds the star process: either the exact
/// urn-computed pi-hat or the empirical law of chosen types from a growth run.
class TypeDistribution {
 public:
  TypeDistribution() = default;
  /// Merges duplicate types; probabilities are renormalized to sum to 1.
  TypeDistribution(std::vector<FaceType> types, std::vector<double> probs);

  /// Equal mass on every sample (duplicates accumulate).
  static TypeDistribution empirical(std::span<const FaceType> samples);
  static TypeDistribution point_mass(FaceType type);

  const FaceType& sample(Rng& rng) const;

  std::span<const FaceType> types() const noexcept { return types_; }
  std::span<const double> probabilities() const noexcept { return probs_; }
  std::size_t size() const noexcept { return types_.size(); }
  bool empty() const noexcept { return types_.empty(); }
  /// Probability of `t` (0 when absent).
  double probability(const FaceType& t) const;

  /// Half the L1 distance over the union of supports.
  double total_variation(const TypeDistribution& other) const;

 private:
  std::vector<FaceType> types_;  // sorted, unique
  std::vector<double> probs_;
  std::vector<double> cumulative_;
};

}  // namespace simplex
