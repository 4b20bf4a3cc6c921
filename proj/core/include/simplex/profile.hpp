#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simplex/error.hpp"

namespace simplex {

enum class Provenance { Growth, StarMc, ClosedForm };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& s);

struct ProfileEntry {
  int k = 0;               // excess degree: the vertex has degree d + k
  double count = 0.0;      // summed over replicas (integral for growth)
  double fraction = 0.0;   // N_k(n)/n, or p_k
  double std_error = 0.0;  // across replicas

  bool operator==(const ProfileEntry&) const = default;
};

/// Degree distribution indexed by excess degree k >= 0.
struct DegreeProfile {
  Provenance provenance = Provenance::Growth;
  int d = 0;
  std::uint64_t n = 0;
  std::uint64_t replicas = 1;
  std::vector<ProfileEntry> entries;  // ascending k

  double fraction(int k) const;
  double std_error(int k) const;
  int k_max() const noexcept { return entries.empty() ? -1 : entries.back().k; }
  double total_fraction() const;
  /// sum_k k * fraction_k
  double mean_excess() const;

  bool operator==(const DegreeProfile&) const = default;
};

/// Streaming per-coordinate mean and variance (Welford). Merging in a fixed
/// order keeps results independent of how replicas were scheduled.
class MeanAccumulator {
 public:
  explicit MeanAccumulator(std::size_t dims = 0) : mean_(dims, 0.0), m2_(dims, 0.0) {}

  void add(std::span<const double> x);
  void merge(const MeanAccumulator& other);

  std::uint64_t count() const noexcept { return count_; }
  std::size_t dims() const noexcept { return mean_.size(); }
  double mean(std::size_t i) const { return mean_[i]; }
  /// Unbiased sample variance (0 for fewer than two samples).
  double variance(std::size_t i) const;
  double std_error(std::size_t i) const;

 private:
  std::uint64_t count_ = 0;
  std::vector<double> mean_;
  std::vector<double> m2_;
};

/// Builds a growth profile from per-replica N_k(n) count vectors. With a
/// single replica the standard error is the binomial sqrt(p(1-p)/n).
DegreeProfile aggregate_growth_counts(std::span<const std::vector<std::uint64_t>> per_replica,
                                      int d, std::uint64_t n);

struct TailFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2_loglog = 0.0;
  /// r^2 of log p_k against k (exponential decay model).
  double r2_loglinear = 0.0;
  bool power_law_preferred = false;
  std::size_t points = 0;
};

/// Least-squares slope of log p_k against log(d + k) over k in [k_lo, k_hi].
/// Throws InsufficientSupport with fewer than five positive entries.
TailFit fit_tail_slope(const DegreeProfile& profile, int k_lo, int k_hi);

struct ProfileComparison {
  double max_abs_diff = 0.0;
  int worst_k = -1;
  std::vector<std::pair<int, double>> z_scores;  // (k, z)
  double tolerance = 0.0;
  bool passed = false;
};

/// Symmetric comparison over k <= k_max present in both profiles. z-scores use
/// the combined standard error; a zero error with zero difference scores 0.
ProfileComparison compare_profiles(const DegreeProfile& a, const DegreeProfile& b, int k_max,
                                   double tolerance);

}  // namespace simplex
