#pragma once

#include <cstdint>
#include <vector>

#include "simplex/error.hpp"
#include "simplex/rng.hpp"

namespace simplex {

/// Mutable weighted index over slots with O(log n) insert, remove and
/// proportional sampling.
///
/// Weights live in an implicit binary-indexed (Fenwick) tree whose capacity is
/// a power of two, so sampling is a single top-down descent. Freed slots are
/// recycled LIFO. The running total is updated incrementally and re-summed
/// exactly (together with the tree) every kRebuildInterval mutations, which
/// bounds floating-point drift on long runs.
class DynamicWeightedIndex {
 public:
  using Handle = std::uint32_t;

  static constexpr std::uint64_t kRebuildInterval = std::uint64_t{1} << 20;

  DynamicWeightedIndex() = default;
  explicit DynamicWeightedIndex(std::size_t reserve);

  /// Throws NonPositiveWeight unless w is positive and finite.
  Handle insert(double w);
  /// Returns the removed weight. Throws StaleHandle for a dead handle.
  double remove(Handle h);
  /// Slot with probability weight/total. Throws EmptyIndex.
  Handle sample(Rng& rng) const;

  double total() const noexcept { return total_; }
  std::size_t size() const noexcept { return live_; }
  bool empty() const noexcept { return live_ == 0; }
  bool live(Handle h) const noexcept { return h < weights_.size() && weights_[h] > 0.0; }
  double weight(Handle h) const;
  /// One past the largest handle ever issued.
  std::size_t slot_count() const noexcept { return used_; }
  std::uint64_t mutations() const noexcept { return mutations_; }

  /// Compensated sum of live weights, computed from scratch.
  double recompute_total() const;
  /// Rebuilds the tree and resets the total to recompute_total().
  void rebuild();

 private:
  void grow();
  void add(std::size_t slot, double delta);
  void note_mutation();

  std::vector<double> weights_;  // 0 marks a free slot
  std::vector<double> tree_;     // 1-based Fenwick tree, size capacity + 1
  std::vector<Handle> free_;
  std::size_t capacity_ = 0;
  std::size_t used_ = 0;
  std::size_t live_ = 0;
  double total_ = 0.0;
  std::uint64_t mutations_ = 0;
};

}  // namespace simplex
