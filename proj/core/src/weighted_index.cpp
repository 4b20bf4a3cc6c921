#include "simplex/weighted_index.hpp"

#include <bit>
#include <cmath>

namespace simplex {

DynamicWeightedIndex::DynamicWeightedIndex(std::size_t reserve) {
  capacity_ = std::bit_ceil(std::max<std::size_t>(reserve, 1));
  weights_.assign(capacity_, 0.0);
  tree_.assign(capacity_ + 1, 0.0);
}

void DynamicWeightedIndex::grow() {
  capacity_ = capacity_ == 0 ? 16 : capacity_ * 2;
  weights_.resize(capacity_, 0.0);
  tree_.assign(capacity_ + 1, 0.0);
  // O(n) Fenwick construction.
  for (std::size_t i = 1; i <= capacity_; ++i) {
    tree_[i] += weights_[i - 1];
    const std::size_t parent = i + (i & (~i + 1));
    if (parent <= capacity_) tree_[parent] += tree_[i];
  }
}

void DynamicWeightedIndex::add(std::size_t slot, double delta) {
  for (std::size_t i = slot + 1; i <= capacity_; i += i & (~i + 1)) tree_[i] += delta;
}

void DynamicWeightedIndex::note_mutation() {
  if (++mutations_ % kRebuildInterval == 0) rebuild();
}

DynamicWeightedIndex::Handle DynamicWeightedIndex::insert(double w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw Error(ErrorCode::NonPositiveWeight, "weight must be positive and finite");
  }
  Handle h;
  if (!free_.empty()) {
    h = free_.back();
    free_.pop_back();
  } else {
    if (used_ == capacity_) grow();
    h = static_cast<Handle>(used_++);
  }
  weights_[h] = w;
  add(h, w);
  total_ += w;
  ++live_;
  note_mutation();
  return h;
}

double DynamicWeightedIndex::remove(Handle h) {
  if (!live(h)) throw Error(ErrorCode::StaleHandle, "handle " + std::to_string(h) + " is not live");
  const double w = weights_[h];
  weights_[h] = 0.0;
  add(h, -w);
  total_ -= w;
  --live_;
  free_.push_back(h);
  if (live_ == 0) total_ = 0.0;
  note_mutation();
  return w;
}

double DynamicWeightedIndex::weight(Handle h) const {
  if (!live(h)) throw Error(ErrorCode::StaleHandle, "handle " + std::to_string(h) + " is not live");
  return weights_[h];
}

DynamicWeightedIndex::Handle DynamicWeightedIndex::sample(Rng& rng) const {
  if (live_ == 0) throw Error(ErrorCode::EmptyIndex, "cannot sample from an empty index");
  // A target past the tree's own total (possible only through rounding)
  // lands beyond the last live slot; redraw in that case.
  for (int attempt = 0; attempt < 64; ++attempt) {
    double target = uniform01(rng) * total_;
    std::size_t pos = 0;
    for (std::size_t step = capacity_; step > 0; step >>= 1) {
      const std::size_t next = pos + step;
      if (next <= capacity_ && tree_[next] <= target) {
        target -= tree_[next];
        pos = next;
      }
    }
    if (pos < used_ && weights_[pos] > 0.0) return static_cast<Handle>(pos);
  }
  for (std::size_t i = used_; i-- > 0;) {
    if (weights_[i] > 0.0) return static_cast<Handle>(i);
  }
  throw Error(ErrorCode::EmptyIndex, "no live slot found");
}

double DynamicWeightedIndex::recompute_total() const {
  // Neumaier summation.
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < used_; ++i) {
    const double w = weights_[i];
    const double t = sum + w;
    if (std::abs(sum) >= std::abs(w)) {
      comp += (sum - t) + w;
    } else {
      comp += (w - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

void DynamicWeightedIndex::rebuild() {
  std::fill(tree_.begin(), tree_.end(), 0.0);
  for (std::size_t i = 1; i <= capacity_; ++i) {
    tree_[i] += weights_[i - 1];
    const std::size_t parent = i + (i & (~i + 1));
    if (parent <= capacity_) tree_[parent] += tree_[i];
  }
  total_ = recompute_total();
}

}  // namespace simplex
