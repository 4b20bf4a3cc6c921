#include "simplex/type_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "simplex/error.hpp"

namespace simplex {

TypeDistribution::TypeDistribution(std::vector<FaceType> types, std::vector<double> probs) {
  if (types.size() != probs.size()) {
    throw Error(ErrorCode::InvalidArgument, "types and probabilities differ in length");
  }
  std::map<FaceType, double> merged;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (!(probs[i] >= 0.0) || !std::isfinite(probs[i])) {
      throw Error(ErrorCode::BadDistribution, "type probability must be finite and >= 0");
    }
    if (probs[i] > 0.0) merged[std::move(types[i])] += probs[i];
  }
  if (merged.empty()) throw Error(ErrorCode::BadDistribution, "type distribution has no mass");
  double sum = 0.0;
  for (const auto& [t, p] : merged) sum += p;
  double acc = 0.0;
  for (auto& [t, p] : merged) {
    types_.push_back(t);
    probs_.push_back(p / sum);
    acc += p / sum;
    cumulative_.push_back(acc);
  }
}

TypeDistribution TypeDistribution::empirical(std::span<const FaceType> samples) {
  std::vector<FaceType> types(samples.begin(), samples.end());
  std::vector<double> probs(types.size(), 1.0);
  return TypeDistribution(std::move(types), std::move(probs));
}

TypeDistribution TypeDistribution::point_mass(FaceType type) {
  return TypeDistribution({std::move(type)}, {1.0});
}

const FaceType& TypeDistribution::sample(Rng& rng) const {
  if (types_.empty()) throw Error(ErrorCode::EmptyIndex, "empty type distribution");
  const double u = uniform01(rng) * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return types_[static_cast<std::size_t>(it - cumulative_.begin())];
}

double TypeDistribution::probability(const FaceType& t) const {
  auto it = std::lower_bound(types_.begin(), types_.end(), t);
  if (it == types_.end() || !(*it == t)) return 0.0;
  return probs_[static_cast<std::size_t>(it - types_.begin())];
}

double TypeDistribution::total_variation(const TypeDistribution& other) const {
  double l1 = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < types_.size() || j < other.types_.size()) {
    if (j == other.types_.size() || (i < types_.size() && types_[i] < other.types_[j])) {
      l1 += probs_[i++];
    } else if (i == types_.size() || other.types_[j] < types_[i]) {
      l1 += other.probs_[j++];
    } else {
      l1 += std::abs(probs_[i++] - other.probs_[j++]);
    }
  }
  return 0.5 * l1;
}

}  // namespace simplex
