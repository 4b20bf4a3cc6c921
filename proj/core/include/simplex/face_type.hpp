#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace simplex {

/// Largest supported complex dimension. Hot loops keep per-face scratch on
/// the stack, so this is a compile-time bound.
inline constexpr int kMaxDimension = 16;

/// Sorted (non-decreasing) vector of vertex weights describing a face.
/// A (d-1)-face has a type of length d; star co-types have length d-1.
class FaceType {
 public:
  FaceType() = default;
  explicit FaceType(std::vector<double> weights);
  FaceType(std::initializer_list<double> weights);

  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

  /// x_{i<-w}: replace coordinate i by w and re-sort.
  FaceType replaced(std::size_t i, double w) const;
  /// x with coordinate i dropped.
  FaceType dropped(std::size_t i) const;
  /// x merged with w.
  FaceType merged(double w) const;

  std::string to_string() const;

  auto operator<=>(const FaceType&) const = default;
  bool operator==(const FaceType&) const = default;

 private:
  std::vector<double> weights_;
};

/// Insertion sort for short stack buffers in the growth loop.
inline void sort_small(std::span<double> xs) noexcept {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double v = xs[i];
    std::size_t j = i;
    while (j > 0 && xs[j - 1] > v) {
      xs[j] = xs[j - 1];
      --j;
    }
    xs[j] = v;
  }
}

}  // namespace simplex
