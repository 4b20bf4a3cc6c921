#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "simplex/error.hpp"
#include "simplex/rng.hpp"

namespace simplex {

struct Atom {
  double value;
  double prob;

  bool operator==(const Atom&) const = default;
};

struct CdfPoint {
  double value;
  double cumulative;

  bool operator==(const CdfPoint&) const = default;
};

/// Probability measure on [0, 1] for vertex weights.
///
/// Three shapes are supported: a finite list of atoms, the uniform law, and a
/// tabulated CDF that is linear between grid points (inverse-transform
/// sampling). A table whose first cumulative value is positive places an atom
/// of that mass on the first grid value.
class WeightLaw {
 public:
  enum class Kind { FiniteSupport, Uniform01, TableCdf };

  WeightLaw() = default;

  static WeightLaw finite(std::vector<Atom> atoms);
  static WeightLaw uniform01();
  static WeightLaw table_cdf(std::vector<CdfPoint> grid);

  Kind kind() const noexcept { return kind_; }
  bool finitely_supported() const noexcept { return kind_ == Kind::FiniteSupport; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::span<const CdfPoint> grid() const noexcept { return grid_; }

  /// Invariant violations (empty when valid). Does not throw.
  std::vector<Issue> issues() const;

  /// Sorts atoms by value and rescales probabilities to sum to exactly 1.
  /// Precondition: issues() is empty.
  void normalize();

  double sample(Rng& rng) const;
  /// Generalized inverse CDF, u in [0, 1).
  double quantile(double u) const;

  double mean() const;
  double variance() const;
  /// mu({x}).
  double atom_mass(double x) const;
  double support_min() const;
  double support_max() const;
  /// True when x lies in the support (exact match for atoms).
  bool in_support(double x) const;

  /// E[g(W)]: exact atom sum for finite support, otherwise midpoint quadrature
  /// over `quadrature_points` quantiles.
  double expect(const std::function<double(double)>& g,
                std::size_t quadrature_points = 1'000'000) const;

  bool operator==(const WeightLaw& other) const {
    return kind_ == other.kind_ && atoms_ == other.atoms_ && grid_ == other.grid_;
  }

 private:
  Kind kind_ = Kind::Uniform01;
  std::vector<Atom> atoms_;
  std::vector<CdfPoint> grid_;
  std::vector<double> cumulative_;  // finite support only
};

std::string to_string(WeightLaw::Kind kind);

}  // namespace simplex
