#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "simplex/error.hpp"
#include "simplex/face_type.hpp"

namespace simplex {

/// Named scalar map g used by product fitness f(x) = prod g(x_i).
struct ScalarMap {
  enum class Kind {
    Identity,  // x
    Shifted,   // param + x
    Exp,       // exp(param * x)
    Power,     // x^param
  };

  Kind kind = Kind::Identity;
  double param = 0.0;

  double operator()(double x) const;
  bool increasing() const;
  std::string name() const;

  bool operator==(const ScalarMap&) const = default;
};

/// Parses "identity", "shifted", "exp", "power".
ScalarMap::Kind parse_scalar_map_kind(const std::string& name);

enum class Monotonicity { Increasing, NotIncreasing, Unknown };

std::string to_string(Monotonicity m);

/// Symmetric positive fitness of a face type. Every kind depends only on the
/// multiset of coordinates; evaluation sorts its input first, so permuted
/// arguments give bit-identical results.
class Fitness {
 public:
  enum class Kind { Constant, Product, EnergyExp, Table };

  Fitness() = default;

  static Fitness constant(double f0);
  static Fitness product(ScalarMap g);
  /// exp(-beta * sum(1 - x_i)), the energy encoding w = 1 - epsilon.
  static Fitness energy_exp(double beta);
  static Fitness table(std::map<FaceType, double> entries);

  Kind kind() const noexcept { return kind_; }
  double f0() const noexcept { return f0_; }
  double beta() const noexcept { return beta_; }
  const ScalarMap& scalar_map() const noexcept { return g_; }
  const std::map<FaceType, double>& entries() const noexcept { return table_; }

  /// Hot path: `sorted` must already be non-decreasing.
  double evaluate_sorted(std::span<const double> sorted) const;
  /// Any order.
  double operator()(std::span<const double> x) const;
  double operator()(const FaceType& x) const { return evaluate_sorted(x.weights()); }

  Monotonicity monotonicity() const;
  bool continuous() const noexcept { return kind_ != Kind::Table; }

  bool operator==(const Fitness&) const = default;

 private:
  Kind kind_ = Kind::Constant;
  double f0_ = 1.0;
  double beta_ = 0.0;
  ScalarMap g_;
  std::map<FaceType, double> table_;
};

std::string to_string(Fitness::Kind kind);

}  // namespace simplex
