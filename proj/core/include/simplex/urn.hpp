#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "simplex/face_type.hpp"
#include "simplex/model_config.hpp"
#include "simplex/type_distribution.hpp"

namespace simplex {

/// Largest type space the urn analysis will build.
inline constexpr std::uint64_t kMaxUrnTypes = 20'000;

/// C(M + d - 1, d), saturating at UINT64_MAX.
std::uint64_t type_space_size(std::size_t atoms, int d);

/// Every multiset of size d over `support` (ascending, distinct), in
/// lexicographic order. Throws TypeSpaceTooLarge above kMaxUrnTypes.
std::vector<FaceType> enumerate_types(std::span<const double> support, int d);

/// Generalized Polya urn whose colours are the face types of a finitely
/// supported model. Column x' of A is the expected drift when a ball of
/// type x' is drawn, scaled by its activity: A_{x x'} = f(x') E[xi_{x' x}].
class UrnModel {
 public:
  struct Entry {
    std::uint32_t col = 0;
    double value = 0.0;
  };

  int dimension() const noexcept { return d_; }
  Variant variant() const noexcept { return variant_; }
  std::span<const double> support() const noexcept { return support_; }
  std::span<const FaceType> types() const noexcept { return types_; }
  std::size_t size() const noexcept { return types_.size(); }
  /// a_x = f(x).
  std::span<const double> activity() const noexcept { return activity_; }

  /// Position of `t` in types(); throws InvalidArgument if absent.
  std::size_t index_of(const FaceType& t) const;
  double entry(std::size_t row, std::size_t col) const;
  /// Row-major copy of A. Meant for tests on small type spaces.
  std::vector<double> dense() const;
  /// out = A * in.
  void multiply(std::span<const double> in, std::span<double> out) const;
  double min_diagonal() const;
  std::size_t nonzeros() const noexcept { return entries_.size(); }

 private:
  friend UrnModel mean_matrix(const ModelConfig& cfg);

  int d_ = 0;
  Variant variant_ = Variant::A;
  std::vector<double> support_;
  std::vector<FaceType> types_;
  std::vector<std::vector<std::uint32_t>> codes_;  // atom indices per type
  std::vector<double> activity_;
  std::vector<std::size_t> row_start_;  // CSR over rows of A
  std::vector<Entry> entries_;
};

/// Builds A from the replacement rule: drawing x' adds x'_{i<-W} for each
/// coordinate i, and Model B also removes the drawn ball. Throws
/// HypothesisViolated unless mu is finitely supported and f > 0 with an
/// unbounded number of active faces.
UrnModel mean_matrix(const ModelConfig& cfg);

struct PerronResult {
  double lambda = 0.0;
  std::vector<double> vector;  // a . v = 1
  double residual = 0.0;       // ||A v - lambda v||_inf
  std::uint64_t iterations = 0;
  double shift = 0.0;
};

/// Power iteration on A + cI with c = max(0, -min diag A), plus 1 when the
/// shifted diagonal is identically zero (a periodic matrix would otherwise
/// oscillate). Stops once the residual is at most tol * lambda. Throws
/// NoConvergence after max_iter iterations.
PerronResult perron(const UrnModel& urn, double tol = 1e-10,
                    std::uint64_t max_iter = 1'000'000);

/// pi-hat(x) = f(x) pi(x) / sum_y f(y) pi(y).
TypeDistribution stationary_type_law(const UrnModel& urn, const PerronResult& p);

struct UrnSolution {
  std::vector<FaceType> types;
  double lambda = 0.0;
  std::vector<double> pi;      // lambda * v
  std::vector<double> pi_hat;  // aligned with types
  double residual = 0.0;
  std::uint64_t iterations = 0;

  TypeDistribution type_law() const { return TypeDistribution(types, pi_hat); }
};

UrnSolution solve_urn(const ModelConfig& cfg, double tol = 1e-10);

}  // namespace simplex
